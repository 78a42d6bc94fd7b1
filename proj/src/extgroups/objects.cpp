#include "picseq/extgroups/objects.hpp"

#include "picseq/bimodule/hom.hpp"
#include "picseq/error.hpp"

namespace picseq::extgroups {

using bimodule::Linearity;
using bimodule::descend;
using bimodule::descend_from_basis;
using bimodule::tensor_over;

namespace {

bool same_module(const Bimodule& a, const Bimodule& b) {
  return a.left == b.left && a.right == b.right && a.dim == b.dim && a.left_act == b.left_act &&
         a.right_act == b.right_act;
}

Mat right_induced_map(const Bimodule& x, const Mat& phi, const TensorProduct& p_s) {
  return descend_from_basis(p_s, x.dim, [&](int i, int a) { return x.right_act[a] * phi.col(i); });
}

Mat left_induced_map(const Bimodule& x, const Mat& phi, const TensorProduct& s_p) {
  return descend_from_basis(s_p, x.dim, [&](int a, int i) { return x.left_act[a] * phi.col(i); });
}

}  // namespace

MsrObject make_object(const ExtensionModules& v, const Bimodule& p, const Bimodule& x, const Mat& phi,
                      const PicardPair& pic_p, const PicardPair& pic_x) {
  if (p.left != v.ext.R || p.right != v.ext.R) throw Error(ErrorKind::IncompatibleAlgebras, "P is not an R-bimodule");
  if (x.left != v.ext.S || x.right != v.ext.S) throw Error(ErrorKind::IncompatibleAlgebras, "X is not an S-bimodule");
  if (pic_p.base != v.ext.R || !same_module(pic_p.P, p)) {
    throw Error(ErrorKind::WitnessesInvalid, "Picard witnesses do not belong to P");
  }
  if (pic_x.base != v.ext.S || !same_module(pic_x.P, x)) {
    throw Error(ErrorKind::WitnessesInvalid, "Picard witnesses do not belong to X");
  }
  if (!bimodule::is_linear(p, v.as_rr(x), phi, Linearity::Bilinear)) {
    throw Error(ErrorKind::NotBilinear, "φ is not R-bilinear");
  }
  MsrObject o{p, x, phi, tensor_over(p, v.s_rs), tensor_over(v.s_sr, p), {}, {}, pic_p, pic_x};
  o.right_induced = right_induced_map(x, phi, o.p_s);
  o.left_induced = left_induced_map(x, phi, o.s_p);
  if (!exactla::is_invertible(o.right_induced)) {
    throw Error(ErrorKind::NotInvertible, "P ⊗_R S -> X, p ⊗ s ↦ φ(p)s is not bijective");
  }
  if (!exactla::is_invertible(o.left_induced)) {
    throw Error(ErrorKind::NotInvertible, "S ⊗_R P -> X, t ⊗ p ↦ tφ(p) is not bijective");
  }
  if (exactla::rank(phi) != p.dim) throw Error(ErrorKind::NotInvertible, "φ is not injective");
  return o;
}

InducedMapsReport induced_maps_report(const ExtensionModules& v, const Bimodule& p, const Bimodule& x,
                                      const Mat& phi, const std::optional<PicardPair>& pic_p,
                                      const std::optional<PicardPair>& pic_x) {
  InducedMapsReport rep;
  rep.preconditions_met = pic_p && pic_x && same_module(pic_p->P, p) && same_module(pic_x->P, x);
  if (!rep.preconditions_met) rep.note = "Picard witnesses missing or mismatched: equivalence not claimed";
  if (!bimodule::is_linear(p, v.as_rr(x), phi, Linearity::Bilinear)) {
    rep.note = "φ is not R-bilinear";
    rep.preconditions_met = false;
    return rep;
  }
  rep.right_iso = exactla::is_invertible(right_induced_map(x, phi, tensor_over(p, v.s_rs)));
  rep.left_iso = exactla::is_invertible(left_induced_map(x, phi, tensor_over(v.s_sr, p)));
  rep.injective = exactla::rank(phi) == p.dim;
  rep.equivalence_holds = rep.right_iso == rep.left_iso && (!rep.right_iso || rep.injective);
  return rep;
}

PicardPair subbimodule_pair(const ExtensionModules& v, const InvElem& e) {
  const auto& S = *v.ext.S;
  Bimodule xm = subbimodule_module(v, e.x);
  Bimodule ym = subbimodule_module(v, e.y);
  std::vector<Vec> xb = e.x.basis_vectors();
  std::vector<Vec> yb = e.y.basis_vectors();
  Mat r = descend_from_basis(tensor_over(ym, xm), v.ext.R->dim(),
                             [&](int i, int j) { return v.ext.to_r(S.multiply(yb[i], xb[j])); });
  Mat l = descend_from_basis(tensor_over(xm, ym), v.ext.R->dim(),
                             [&](int i, int j) { return v.ext.to_r(S.multiply(xb[i], yb[j])); });
  return bimodule::make_picard_pair(xm, ym, r, l);
}

PicardPair twisted_pair(const ExtensionModules& v, const Mat& gamma) {
  const auto& S = *v.ext.S;
  const int n = S.dim();
  Mat ginv = exactla::inverse(gamma);
  Bimodule p = bimodule::twist(v.s_reg, gamma);
  Bimodule q = bimodule::twist(v.s_reg, ginv);
  Mat r = descend_from_basis(tensor_over(q, p), n,
                             [&](int i, int j) { return S.multiply(exactla::unit_vec(n, i), ginv.col(j)); });
  Mat l = descend_from_basis(tensor_over(p, q), n,
                             [&](int i, int j) { return S.multiply(exactla::unit_vec(n, i), gamma.col(j)); });
  return bimodule::make_picard_pair(p, q, r, l);
}

MsrObject neutral_object(const ExtensionModules& v) {
  return make_object(v, v.r_reg, v.s_reg, v.ext.inclusion, bimodule::trivial_pair(v.ext.R),
                     bimodule::trivial_pair(v.ext.S));
}

MsrObject inclusion_object(const ExtensionModules& v, const InvElem& x) {
  return make_object(v, subbimodule_module(v, x.x), v.s_reg, x.x.embedding(), subbimodule_pair(v, x),
                     bimodule::trivial_pair(v.ext.S));
}

MsrObject twisted_unit_object(const ExtensionModules& v, const Mat& gamma) {
  return make_object(v, v.r_reg, bimodule::twist(v.s_reg, gamma), v.ext.inclusion, bimodule::trivial_pair(v.ext.R),
                     twisted_pair(v, gamma));
}

namespace {

// Witnesses for M ⊗ N from those of M and N:
// (q̄ ⊗ p̄) ⊗ (p ⊗ q) ↦ r_N(q̄ r_M(p̄ ⊗ p) ⊗ q), l solved from it.
PicardPair product_pair(const PicardPair& a, const PicardPair& b, const TensorProduct& pq) {
  TensorProduct inv = tensor_over(b.Q, a.Q);
  TensorProduct both = tensor_over(inv.module, pq.module);
  const int n = a.base->dim();
  Mat r = descend_from_basis(both, n, [&](int k, int m) {
    auto [qbar, pbar] = inv.representative(k);
    auto [pi, qi] = pq.representative(m);
    Vec inner = a.r_of(exactla::unit_vec(a.Q.dim, pbar), exactla::unit_vec(a.P.dim, pi));
    Vec moved = b.Q.right_of(inner).col(qbar);
    return b.r_of(moved, exactla::unit_vec(b.P.dim, qi));
  });
  return bimodule::make_picard_pair(pq.module, inv.module, r);
}

}  // namespace

MsrObject object_product(const ExtensionModules& v, const MsrObject& a, const MsrObject& b) {
  TensorProduct pq = tensor_over(a.P, b.P);
  TensorProduct xy = tensor_over(a.X, b.X);
  TensorProduct xy_r = tensor_over(v.as_sr(a.X), v.as_rs(b.X));
  Mat omega = descend(xy.projection, xy_r);
  Mat chi = omega * bimodule::tensor_maps(pq, xy_r, a.phi, b.phi);
  return make_object(v, pq.module, xy.module, chi, product_pair(a.pic_p, b.pic_p, pq),
                     product_pair(a.pic_x, b.pic_x, xy));
}

InverseResult object_inverse(const ExtensionModules& v, const MsrObject& a) {
  const auto& S = *v.ext.S;
  const int ns = S.dim();
  const PicardPair& pp = a.pic_p;
  const PicardPair& px = a.pic_x;
  const Bimodule& Q = pp.Q;
  const Bimodule& Y = px.Q;

  bimodule::TensorToHom theta = bimodule::tensor_to_hom(pp, v.r_reg);
  Mat unit_q = exactla::inverse(bimodule::left_action_map(theta.nq, Q));
  bimodule::TensorToHom gamma = bimodule::tensor_to_hom(px, v.s_reg);
  Mat act_y = bimodule::left_action_map(gamma.nq, Y);
  Mat right_inv = exactla::inverse(a.right_induced);

  // σ ↦ (σ ⊗ S) ∘ (P ⊗_R S -> X)^{-1}
  Mat dual(gamma.hom.module.dim, theta.hom.module.dim, S.p());
  for (int c = 0; c < theta.hom.module.dim; ++c) {
    Mat sigma = theta.hom.as_matrix(exactla::unit_vec(theta.hom.module.dim, c));
    Mat applied = descend_from_basis(a.p_s, ns, [&](int i, int j) {
      return S.multiply(v.ext.to_s(sigma.col(i)), exactla::unit_vec(ns, j));
    });
    auto coords = gamma.hom.coordinates(applied * right_inv);
    if (!coords) throw Error(ErrorKind::WitnessesInvalid, "dual map leaves the unital part of Hom_S(X, S)");
    dual.set_col(c, *coords);
  }
  InverseResult out;
  out.psi = act_y * exactla::inverse(gamma.map) * dual * theta.map * unit_q;

  TensorProduct xy_r = tensor_over(v.as_sr(a.X), v.as_rs(Y));
  Mat omega = descend(px.pq.projection, xy_r);
  Mat lhs = px.l * omega * bimodule::tensor_maps(pp.pq, xy_r, a.phi, out.psi);
  Mat rhs = v.ext.inclusion * pp.l;
  out.square_commutes = lhs == rhs;
  if (!out.square_commutes) {
    throw Error(ErrorKind::CoherenceFailure, "l' ∘ ω ∘ (φ ⊗ ψ) differs from ι ∘ l");
  }
  out.object = make_object(v, Q, Y, out.psi, bimodule::swapped(pp), bimodule::swapped(px));
  return out;
}

std::optional<std::pair<Mat, Mat>> object_class_iso(const MsrObject& a, const MsrObject& b) {
  if (a.P.dim != b.P.dim || a.X.dim != b.X.dim) return std::nullopt;
  const int prime = a.phi.p();
  std::vector<Mat> alphas = bimodule::hom_basis(a.P, b.P, Linearity::Bilinear);
  std::vector<Mat> betas = bimodule::hom_basis(a.X, b.X, Linearity::Bilinear);
  const int na = static_cast<int>(alphas.size());
  const int nb = static_cast<int>(betas.size());
  Mat sys(b.X.dim * a.P.dim, na + nb, prime);
  for (int i = 0; i < na; ++i) sys.set_col(i, (b.phi * alphas[i]).data());
  for (int j = 0; j < nb; ++j) sys.set_col(na + j, (betas[j] * a.phi).scaled(prime - 1).data());
  Subspace sols = exactla::kernel(sys);
  if (exactla::element_count(sols) > bimodule::kDefaultSearchLimit) {
    throw Error(ErrorKind::SearchTooLarge, "morphism space of objects is too large to scan");
  }
  Vec c = exactla::zero_vec(sols.dim());
  while (exactla::next_coordinates(c, prime)) {
    Vec x = sols.from_coordinates(c);
    Mat alpha(b.P.dim, a.P.dim, prime);
    Mat beta(b.X.dim, a.X.dim, prime);
    for (int i = 0; i < na; ++i)
      if (x[i] != 0) alpha += alphas[i].scaled(x[i]);
    for (int j = 0; j < nb; ++j)
      if (x[na + j] != 0) beta += betas[j].scaled(x[na + j]);
    if (exactla::is_invertible(alpha) && exactla::is_invertible(beta)) return std::make_pair(alpha, beta);
  }
  if (a.P.dim == 0 && a.X.dim == 0) return std::make_pair(Mat(0, 0, prime), Mat(0, 0, prime));
  return std::nullopt;
}

std::optional<Mat> right_component_witness(const ExtensionModules& v, const MsrObject& a) {
  return bimodule::iso_search(a.X, v.s_reg, Linearity::Bilinear);
}

std::optional<Mat> left_component_witness(const ExtensionModules& v, const MsrObject& a) {
  return bimodule::iso_search(v.r_reg, a.P, Linearity::Bilinear);
}

}  // namespace picseq::extgroups
