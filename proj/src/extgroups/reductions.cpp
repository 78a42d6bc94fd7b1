#include "picseq/extgroups/reductions.hpp"

#include "picseq/bimodule/tensor.hpp"
#include "picseq/error.hpp"

namespace picseq::extgroups {

using bimodule::Linearity;

Mat automorphism_from_twist_iso(const ExtensionModules& v, const Mat& phi, const Mat& omega) {
  if (!exactla::is_invertible(omega) ||
      !bimodule::is_linear(v.s_reg, twisted_regular(v, phi), omega, Linearity::Bilinear)) {
    throw Error(ErrorKind::NotBilinear, "witness is not an S-bilinear isomorphism S -> S_φ");
  }
  const Mat& lambda = omega;
  if (!bimodule::is_linear(v.s_sr, v.s_sr, lambda, Linearity::Bilinear)) {
    throw Error(ErrorKind::Internal, "witness is not (S, R)-bilinear on S");
  }
  if (induced_automorphism(v, lambda) != phi) {
    throw Error(ErrorKind::Internal, "recovered automorphism does not induce φ");
  }
  return lambda;
}

InvElem subbimodule_from_trivial_codomain(const ExtensionModules& v, const InvGroup& inv, const MsrObject& a,
                                          const Mat& beta) {
  if (!exactla::is_invertible(beta) || !bimodule::is_linear(a.X, v.s_reg, beta, Linearity::Bilinear)) {
    throw Error(ErrorKind::NotBilinear, "witness is not an S-bilinear isomorphism X -> S");
  }
  Subspace copy = exactla::image(beta * a.phi);
  Key k = copy.key();
  if (!inv.group.contains(k)) throw Error(ErrorKind::Internal, "copy of P in S is not invertible: " + k);
  return inv.at(k);
}

TrivialDomainReduction automorphism_from_trivial_domain(const ExtensionModules& v, const MsrObject& a,
                                                        const Mat& f) {
  if (!exactla::is_invertible(f) || !bimodule::is_linear(v.r_reg, a.P, f, Linearity::Bilinear)) {
    throw Error(ErrorKind::NotBilinear, "witness is not an R-bilinear isomorphism R -> P");
  }
  const int ns = v.ext.S->dim();
  const int p = v.ext.S->p();
  Mat id_s = Mat::identity(ns, p);

  bimodule::TensorProduct r_s = bimodule::tensor_over(v.r_reg, v.s_rs);
  Mat into_r_s = exactla::inverse(bimodule::left_action_map(r_s, v.s_rs));
  TrivialDomainReduction out;
  out.alpha = a.right_induced * bimodule::tensor_maps(r_s, a.p_s, f, id_s) * into_r_s;

  bimodule::TensorProduct s_r = bimodule::tensor_over(v.s_sr, v.r_reg);
  Mat into_s_r = exactla::inverse(bimodule::right_action_map(s_r, v.s_sr));
  out.beta = a.left_induced * bimodule::tensor_maps(s_r, a.s_p, id_s, f) * into_s_r;

  out.gamma = exactla::inverse(out.beta) * out.alpha;
  if (!bimodule::is_multiplicative(*v.ext.S, out.gamma)) {
    throw Error(ErrorKind::NotMultiplicative, "β^{-1} α is not multiplicative");
  }
  if (out.gamma * v.ext.inclusion != v.ext.inclusion) {
    throw Error(ErrorKind::NotMultiplicative, "β^{-1} α does not fix R");
  }
  if (!bimodule::is_linear(twisted_regular(v, out.gamma), a.X, out.beta, Linearity::Bilinear)) {
    throw Error(ErrorKind::NotBilinear, "β is not S-bilinear from S_γ");
  }
  return out;
}

}  // namespace picseq::extgroups
