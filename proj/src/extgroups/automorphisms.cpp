#include "picseq/extgroups/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "picseq/bimodule/hom.hpp"
#include "picseq/bimodule/picard.hpp"
#include "picseq/error.hpp"

namespace picseq::extgroups {

using bimodule::Linearity;

const Mat& MapGroup::at(const Key& k) const {
  auto it = maps->find(k);
  if (it == maps->end()) throw Error(ErrorKind::Internal, "unknown map key " + k);
  return it->second;
}

MapGroup make_map_group(std::string name, std::vector<Mat> maps, int n, int p) {
  auto table = std::make_shared<std::map<Key, Mat>>();
  std::vector<Key> keys;
  Key neutral = Mat::identity(n, p).key();
  for (Mat& m : maps) {
    Key k = m.key();
    if (table->emplace(k, m).second) keys.push_back(k);
  }
  std::stable_partition(keys.begin(), keys.end(), [&](const Key& k) { return k == neutral; });
  auto lookup = table;
  groupkit::MulFn mul = [lookup](const Key& a, const Key& b) { return (lookup->at(a) * lookup->at(b)).key(); };
  return MapGroup{FiniteGroup(std::move(name), std::move(keys), std::move(mul), neutral), table};
}

MapGroup bilinear_automorphisms(const ExtensionModules& v) {
  const int n = v.ext.S->dim();
  const int p = v.ext.S->p();
  Subspace h = bimodule::hom_space(v.s_sr, v.s_sr, Linearity::Bilinear);
  std::vector<Mat> maps;
  for (const Vec& flat : exactla::elements(h, kVectorEnumerationLimit)) {
    Mat m = bimodule::unflatten(flat, n, n, p);
    if (exactla::is_invertible(m)) maps.push_back(m);
  }
  return make_map_group("Aut_SR(S)", std::move(maps), n, p);
}

MapGroup ring_automorphisms_over_base(const ExtensionModules& v) {
  const auto& S = *v.ext.S;
  const int n = S.dim();
  const int p = S.p();
  const Mat& incl = v.ext.inclusion;
  Subspace h = bimodule::hom_space(v.s_rr, v.s_rr, Linearity::Bilinear);
  // Affine condition: (Σ x_i H_i) ι = ι.
  Mat sys(n * incl.cols(), h.dim(), p);
  std::vector<Mat> basis;
  for (int i = 0; i < h.dim(); ++i) {
    basis.push_back(bimodule::unflatten(h.basis().row_vec(i), n, n, p));
    sys.set_col(i, (basis.back() * incl).data());
  }
  std::vector<Mat> maps;
  auto x0 = exactla::solve(sys, incl.data());
  if (x0) {
    Subspace free = exactla::kernel(sys);
    for (const Vec& k : exactla::elements(free, kVectorEnumerationLimit)) {
      Vec x = exactla::add(*x0, k, p);
      Mat m(n, n, p);
      for (int i = 0; i < h.dim(); ++i) {
        if (x[i] != 0) m += basis[i].scaled(x[i]);
      }
      if (exactla::is_invertible(m) && bimodule::is_multiplicative(S, m)) maps.push_back(m);
    }
  }
  return make_map_group("Aut_R-rings(S)", std::move(maps), n, p);
}

InvElem base_preimage(const ExtensionModules& v, const Mat& lambda) {
  InvElem out{exactla::preimage(lambda, v.ext.r_space), exactla::image(lambda, v.ext.r_space)};
  const auto& S = *v.ext.S;
  if (bimodule::product_span(S, out.x, out.y) != v.ext.r_space ||
      bimodule::product_span(S, out.y, out.x) != v.ext.r_space) {
    throw Error(ErrorKind::Internal, "preimage of R is not invertible with partner λ(R)");
  }
  return out;
}

Mat induced_automorphism(const ExtensionModules& v, const Mat& lambda, bool* unit_independent) {
  const auto& S = *v.ext.S;
  const int n = S.dim();
  Mat inv = exactla::inverse(lambda);
  Mat out(n, n, S.p());
  bool same = true;
  for (int k = 0; k < n; ++k) {
    Vec s = exactla::unit_vec(n, k);
    auto units = algebra::units_for(S, {s});
    if (units.empty()) throw Error(ErrorKind::Validation, "no local unit fixes " + S.basis_names()[k]);
    std::optional<Vec> first;
    for (int ui : units) {
      const Vec& e = S.local_units()[ui];
      Vec value = S.multiply(S.multiply(inv * e, s), lambda * e);
      if (!first) {
        first = value;
        if (unit_independent == nullptr) break;
      } else if (*first != value) {
        same = false;
      }
    }
    out.set_col(k, *first);
  }
  if (unit_independent != nullptr) *unit_independent = same;
  return out;
}

bool unit_inverse_identity(const ExtensionModules& v, const Mat& lambda) {
  const auto& S = *v.ext.S;
  Mat inv = exactla::inverse(lambda);
  for (const Vec& e : S.local_units()) {
    Vec a = lambda * e;
    Vec b = inv * e;
    if (S.multiply(a, b) != e || S.multiply(b, a) != e) return false;
  }
  return true;
}

Bimodule twisted_regular(const ExtensionModules& v, const Mat& phi) { return bimodule::twist(v.s_reg, phi); }

std::optional<Mat> twist_trivial_witness(const ExtensionModules& v, const Mat& phi) {
  return bimodule::iso_search(v.s_reg, twisted_regular(v, phi), Linearity::Bilinear);
}

namespace {

// λ(e) ∈ U(Z(eAe)) for all local units e, with A = R (in_base) or S.
bool units_central(const ExtensionModules& v, const Mat& lambda, bool in_base) {
  const auto& S = *v.ext.S;
  for (std::size_t u = 0; u < S.local_units().size(); ++u) {
    const Vec& e = S.local_units()[u];
    Vec img = lambda * e;
    std::vector<Vec> allowed;
    if (in_base) {
      const auto& R = *v.ext.R;
      for (const Vec& z : algebra::corner_center_units(R, R.local_units()[u])) allowed.push_back(v.ext.to_s(z));
    } else {
      allowed = algebra::corner_center_units(S, e);
    }
    if (std::find(allowed.begin(), allowed.end(), img) == allowed.end()) return false;
  }
  return true;
}

std::vector<Key> filter(const MapGroup& g, const std::function<bool(const Mat&)>& pred) {
  std::vector<Key> out;
  for (const Key& k : g.group.elements()) {
    if (pred(g.at(k))) out.push_back(k);
  }
  return out;
}

bool same_set(const FiniteGroup& a, const FiniteGroup& b) {
  std::set<Key> x(a.elements().begin(), a.elements().end());
  std::set<Key> y(b.elements().begin(), b.elements().end());
  return x == y;
}

}  // namespace

BaseKernelReport base_kernel_report(const ExtensionModules& v, const MapGroup& aut_sr, const InvGroup& inv) {
  BaseKernelReport rep;
  Key neutral = inv.group.neutral();
  rep.kernel = aut_sr.group.subgroup("Ker(D)", filter(aut_sr, [&](const Mat& m) {
    return base_preimage(v, m).x.key() == neutral;
  }));
  rep.described = aut_sr.group.subgroup("U(Z(eRe))-maps", filter(aut_sr, [&](const Mat& m) {
    return units_central(v, m, true);
  }));
  rep.matches = same_set(rep.kernel, rep.described);
  rep.central = groupkit::is_subgroup_of_center(rep.kernel, aut_sr.group);
  return rep;
}

InducedKernelReport induced_kernel_report(const ExtensionModules& v, const MapGroup& aut_sr,
                                          const MapGroup& aut_rrings) {
  InducedKernelReport rep;
  Key neutral = aut_rrings.group.neutral();
  rep.kernel = aut_sr.group.subgroup("Ker(hat)", filter(aut_sr, [&](const Mat& m) {
    return induced_automorphism(v, m).key() == neutral;
  }));
  rep.described = aut_sr.group.subgroup("U(Z(eSe))-maps", filter(aut_sr, [&](const Mat& m) {
    return units_central(v, m, false);
  }));
  // invertible S-bilinear endomorphisms, enumerated on their own
  const int n = v.ext.S->dim();
  const int p = v.ext.S->p();
  std::vector<Key> ss;
  for (const Vec& flat : exactla::elements(bimodule::hom_space(v.s_reg, v.s_reg, Linearity::Bilinear),
                                           kVectorEnumerationLimit)) {
    Mat m = bimodule::unflatten(flat, n, n, p);
    if (exactla::is_invertible(m)) ss.push_back(m.key());
  }
  std::stable_partition(ss.begin(), ss.end(), [&](const Key& k) { return k == aut_sr.group.neutral(); });
  rep.bimodule_maps = aut_sr.group.subgroup("Aut_SS(S)", ss);
  rep.matches_corners = same_set(rep.kernel, rep.described);
  rep.matches_bimodule_maps = same_set(rep.kernel, rep.bimodule_maps);
  return rep;
}

}  // namespace picseq::extgroups
