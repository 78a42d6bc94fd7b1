#include "picseq/bimodule/bimodule.hpp"

#include "picseq/error.hpp"

namespace picseq::bimodule {

namespace {

Mat combine(const std::vector<Mat>& acts, const Vec& coeffs, int dim, int p) {
  if (coeffs.size() != acts.size()) throw Error(ErrorKind::DimensionMismatch, "action coefficients");
  Mat out(dim, dim, p);
  for (std::size_t i = 0; i < acts.size(); ++i) {
    if (coeffs[i] != 0) out += acts[i].scaled(coeffs[i]);
  }
  return out;
}

}  // namespace

Mat Bimodule::left_of(const Vec& a) const { return combine(left_act, a, dim, p()); }
Mat Bimodule::right_of(const Vec& b) const { return combine(right_act, b, dim, p()); }

const char* to_string(Linearity lin) noexcept {
  switch (lin) {
    case Linearity::LeftOnly: return "left-only";
    case Linearity::RightOnly: return "right-only";
    case Linearity::Bilinear: return "bilinear";
  }
  return "?";
}

ValidationReport validate_bimodule(const Bimodule& m) {
  ValidationReport rep;
  const auto& L = *m.left;
  const auto& R = *m.right;
  if (static_cast<int>(m.left_act.size()) != L.dim() || static_cast<int>(m.right_act.size()) != R.dim()) {
    rep.fail("action count does not match algebra dimension");
    return rep;
  }
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = 0; j < L.dim(); ++j) {
      if (m.left_act[i] * m.left_act[j] != m.left_of(L.product(i, j))) {
        rep.fail("left action is not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  for (int i = 0; i < R.dim(); ++i) {
    for (int j = 0; j < R.dim(); ++j) {
      if (m.right_act[j] * m.right_act[i] != m.right_of(R.product(i, j))) {
        rep.fail("right action is not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  for (int i = 0; i < L.dim(); ++i) {
    for (int j = 0; j < R.dim(); ++j) {
      if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i]) {
        rep.fail("actions do not commute on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  return rep;
}

Bimodule regular(const AlgebraPtr& a) {
  Bimodule m;
  m.left = a;
  m.right = a;
  m.dim = a->dim();
  for (int i = 0; i < a->dim(); ++i) {
    m.left_act.push_back(a->left_mult(i));
    m.right_act.push_back(a->right_mult(i));
  }
  return m;
}

Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
  Bimodule m;
  m.left = left;
  m.right = right;
  m.dim = 0;
  m.left_act.assign(static_cast<std::size_t>(left->dim()), Mat(0, 0, left->p()));
  m.right_act.assign(static_cast<std::size_t>(right->dim()), Mat(0, 0, left->p()));
  return m;
}

Bimodule restrict(const Bimodule& m, const AlgebraPtr& new_left, const Mat& left_hom,
                  const AlgebraPtr& new_right, const Mat& right_hom) {
  if (left_hom.rows() != m.left->dim() || left_hom.cols() != new_left->dim() ||
      right_hom.rows() != m.right->dim() || right_hom.cols() != new_right->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "restrict: algebra map shape");
  }
  Bimodule out;
  out.left = new_left;
  out.right = new_right;
  out.dim = m.dim;
  for (int i = 0; i < new_left->dim(); ++i) out.left_act.push_back(m.left_of(left_hom.col(i)));
  for (int j = 0; j < new_right->dim(); ++j) out.right_act.push_back(m.right_of(right_hom.col(j)));
  return out;
}

bool is_stable(const Bimodule& m, const Subspace& space) {
  Mat emb = space.embedding();
  auto stable = [&](const Mat& act) { return space.contains(exactla::image(act * emb)); };
  for (const Mat& a : m.left_act)
    if (!stable(a)) return false;
  for (const Mat& a : m.right_act)
    if (!stable(a)) return false;
  return true;
}

Bimodule sub_bimodule(const Bimodule& m, const Subspace& space) {
  if (space.ambient() != m.dim) throw Error(ErrorKind::DimensionMismatch, "sub_bimodule ambient");
  Mat emb = space.embedding();
  auto restrict_act = [&](const Mat& act) {
    Mat image = act * emb;
    Mat out(space.dim(), space.dim(), m.p());
    for (int c = 0; c < space.dim(); ++c) {
      auto coords = space.coordinates(image.col(c));
      if (!coords) throw Error(ErrorKind::Validation, "subspace is not stable under the action");
      out.set_col(c, *coords);
    }
    return out;
  };
  Bimodule out;
  out.left = m.left;
  out.right = m.right;
  out.dim = space.dim();
  for (const Mat& a : m.left_act) out.left_act.push_back(restrict_act(a));
  for (const Mat& a : m.right_act) out.right_act.push_back(restrict_act(a));
  return out;
}

Subspace closure(const Bimodule& m, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(gens, m.dim, m.p());
  for (;;) {
    std::vector<Vec> more = s.basis_vectors();
    for (const Vec& v : s.basis_vectors()) {
      for (const Mat& a : m.left_act) more.push_back(a * v);
      for (const Mat& a : m.right_act) more.push_back(a * v);
    }
    Subspace next = Subspace::span(more, m.dim, m.p());
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
  if (a.left != b.left || a.right != b.right) {
    throw Error(ErrorKind::IncompatibleAlgebras, "direct sum of bimodules over different algebras");
  }
  Bimodule out;
  out.left = a.left;
  out.right = a.right;
  out.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.left_act.size(); ++i) {
    out.left_act.push_back(exactla::block_diag(a.left_act[i], b.left_act[i]));
  }
  for (std::size_t i = 0; i < a.right_act.size(); ++i) {
    out.right_act.push_back(exactla::block_diag(a.right_act[i], b.right_act[i]));
  }
  return out;
}

bool is_multiplicative(const algebra::Algebra& a, const Mat& phi) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (phi * a.product(i, j) != a.multiply(phi.col(i), phi.col(j))) return false;
    }
  }
  return true;
}

Bimodule twist(const Bimodule& m, const Mat& phi) {
  const auto& R = *m.right;
  if (phi.rows() != R.dim() || phi.cols() != R.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "twist: automorphism shape");
  }
  if (!exactla::is_invertible(phi) || !is_multiplicative(R, phi)) {
    throw Error(ErrorKind::NotMultiplicative, "twist: map is not a ring automorphism");
  }
  return restrict(m, m.left, Mat::identity(m.left->dim(), m.p()), m.right, phi);
}

bool check_unital(const Bimodule& m) {
  std::vector<Vec> lhs;
  std::vector<Vec> rhs;
  for (const Vec& u : m.left->local_units()) {
    Mat a = m.left_of(u);
    for (int c = 0; c < m.dim; ++c) lhs.push_back(a.col(c));
  }
  for (const Vec& u : m.right->local_units()) {
    Mat a = m.right_of(u);
    for (int c = 0; c < m.dim; ++c) rhs.push_back(a.col(c));
  }
  return Subspace::span(lhs, m.dim, m.p()).dim() == m.dim && Subspace::span(rhs, m.dim, m.p()).dim() == m.dim;
}

Subspace unital_part(const Bimodule& m) {
  std::vector<Vec> vs;
  for (const Vec& u : m.left->local_units()) {
    Mat a = m.left_of(u);
    for (const Vec& v : m.right->local_units()) {
      Mat both = a * m.right_of(v);
      for (int c = 0; c < m.dim; ++c) vs.push_back(both.col(c));
    }
  }
  return Subspace::span(vs, m.dim, m.p());
}

Bimodule largest_unital(const Bimodule& m) { return sub_bimodule(m, unital_part(m)); }

void require_compatible(const Bimodule& a, const Bimodule& b, Linearity lin) {
  bool left_ok = a.left == b.left;
  bool right_ok = a.right == b.right;
  bool ok = lin == Linearity::LeftOnly ? left_ok : lin == Linearity::RightOnly ? right_ok : (left_ok && right_ok);
  if (!ok) {
    throw Error(ErrorKind::IncompatibleAlgebras,
                std::string("bimodules do not share algebras for ") + to_string(lin) + " maps");
  }
}

bool is_linear(const Bimodule& source, const Bimodule& target, const Mat& f, Linearity lin) {
  require_compatible(source, target, lin);
  if (f.rows() != target.dim || f.cols() != source.dim) return false;
  if (lin != Linearity::RightOnly) {
    for (std::size_t i = 0; i < source.left_act.size(); ++i) {
      if (f * source.left_act[i] != target.left_act[i] * f) return false;
    }
  }
  if (lin != Linearity::LeftOnly) {
    for (std::size_t i = 0; i < source.right_act.size(); ++i) {
      if (f * source.right_act[i] != target.right_act[i] * f) return false;
    }
  }
  return true;
}

}  // namespace picseq::bimodule

namespace picseq::bimodule {

Bimodule ExtensionModules::as_rr(const Bimodule& x) const {
  return restrict(x, ext.R, ext.inclusion, ext.R, ext.inclusion);
}

Bimodule ExtensionModules::as_sr(const Bimodule& x) const {
  return restrict(x, ext.S, Mat::identity(ext.S->dim(), ext.S->p()), ext.R, ext.inclusion);
}

Bimodule ExtensionModules::as_rs(const Bimodule& x) const {
  return restrict(x, ext.R, ext.inclusion, ext.S, Mat::identity(ext.S->dim(), ext.S->p()));
}

ExtensionModules make_extension_modules(const algebra::RingExtension& ext) {
  if (!ext.R) throw Error(ErrorKind::Validation, "extension has no valid subalgebra R");
  ExtensionModules v;
  v.ext = ext;
  v.r_reg = regular(ext.R);
  v.s_reg = regular(ext.S);
  v.s_rr = v.as_rr(v.s_reg);
  v.s_sr = v.as_sr(v.s_reg);
  v.s_rs = v.as_rs(v.s_reg);
  return v;
}

}  // namespace picseq::bimodule
