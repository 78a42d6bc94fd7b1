#include "picseq/algebra/extension.hpp"

#include "picseq/error.hpp"

namespace picseq::algebra {

Vec RingExtension::to_r(const Vec& s) const {
  auto c = r_space.coordinates(s);
  if (!c) throw Error(ErrorKind::Validation, "element does not lie in R");
  return *c;
}

RingExtension make_extension(AlgebraPtr s, Subspace r_space) {
  if (!s) throw Error(ErrorKind::Internal, "make_extension: null algebra");
  if (r_space.ambient() != s->dim() || r_space.p() != s->p()) {
    throw Error(ErrorKind::DimensionMismatch, "R subspace does not live in S");
  }
  RingExtension ext;
  ext.S = s;
  ext.r_space = r_space;
  ext.inclusion = r_space.embedding();
  const int k = r_space.dim();
  std::vector<Vec> basis = r_space.basis_vectors();
  std::vector<Vec> products;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      auto c = r_space.coordinates(s->multiply(basis[i], basis[j]));
      if (!c) return ext;
      products.push_back(*c);
    }
  }
  std::vector<Vec> units;
  for (const Vec& u : s->local_units()) {
    auto c = r_space.coordinates(u);
    if (!c) return ext;
    units.push_back(*c);
  }
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("r" + std::to_string(i) + "=" + s->format(basis[i]));
  ext.R = std::make_shared<Algebra>(s->p(), std::move(names), std::move(products), std::move(units));
  return ext;
}

ValidationReport validate_extension(const RingExtension& ext) {
  ValidationReport rep = validate_algebra(*ext.S);
  const auto& s = *ext.S;
  std::vector<Vec> basis = ext.r_space.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!ext.r_space.contains(s.multiply(basis[i], basis[j]))) {
        rep.fail("R is not closed under multiplication: (" + s.format(basis[i]) + ")*(" +
                 s.format(basis[j]) + ") leaves R");
      }
    }
  }
  for (std::size_t u = 0; u < s.local_units().size(); ++u) {
    if (!ext.r_space.contains(s.local_units()[u])) {
      rep.fail("local unit #" + std::to_string(u) + " (" + s.format(s.local_units()[u]) + ") is not in R");
    }
  }
  if (!ext.R) {
    if (rep.ok) rep.fail("R could not be built as a subalgebra");
    return rep;
  }
  // Same witnesses inside R: every basis element of R has a unit, and
  // directedness holds (inherited from S, since R contains E).
  for (int i = 0; i < ext.R->dim(); ++i) {
    if (units_for(*ext.R, {exactla::unit_vec(ext.R->dim(), i)}).empty()) {
      rep.fail("no local unit fixes basis element " + ext.R->basis_names()[i] + " of R");
    }
  }
  return rep;
}

}  // namespace picseq::algebra
