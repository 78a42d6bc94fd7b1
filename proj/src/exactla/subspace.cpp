#include "picseq/exactla/subspace.hpp"

#include <cstdint>
#include <sstream>

#include "picseq/error.hpp"
#include "picseq/exactla/kernels.hpp"

namespace picseq::exactla {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || a.p() != b.p()) {
    throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces");
  }
}

std::vector<int> non_pivots(const std::vector<int>& pivots, int n) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

Subspace::Subspace(int ambient, int p) : ambient_(ambient), p_(p), basis_(0, ambient, p) {}

Subspace Subspace::row_space(const Mat& m) {
  Echelon e = rref(m);
  Subspace s(m.cols(), m.p());
  int r = static_cast<int>(e.pivots.size());
  Mat b(r, m.cols(), m.p());
  for (int i = 0; i < r; ++i) {
    auto src = e.reduced.row(i);
    std::copy(src.begin(), src.end(), b.row(i).begin());
  }
  s.basis_ = std::move(b);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient, int p) {
  Mat m(static_cast<int>(vectors.size()), ambient, p);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient) {
      throw Error(ErrorKind::DimensionMismatch, "span: vector length differs from ambient");
    }
    for (int j = 0; j < ambient; ++j) m.set(i, j, vectors[i][j]);
  }
  return row_space(m);
}

Subspace Subspace::whole(int ambient, int p) { return row_space(Mat::identity(ambient, p)); }

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (int i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

Vec Subspace::residue(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient");
  }
  Vec r = v;
  for (int i = 0; i < dim(); ++i) {
    Residue x = r[pivots_[i]];
    if (x != 0) kernels::axpy(r, basis_.row(i), p_ - x, p_);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(residue(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row_vec(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  if (static_cast<int>(c.size()) != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate vector length");
  }
  Vec v = zero_vec(ambient_);
  for (int i = 0; i < dim(); ++i) {
    if (c[i] != 0) kernels::axpy(v, basis_.row(i), reduce(c[i], p_), p_);
  }
  return v;
}

Mat Subspace::embedding() const { return basis_.transpose(); }

std::string Subspace::key() const {
  std::ostringstream os;
  os << "F" << p_ << "^" << ambient_ << ":" << basis_.key();
  return os.str();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Mat> blocks{a.basis(), b.basis()};
  return Subspace::row_space(vstack(blocks, a.ambient(), a.p()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  // x in ker [A^T | -B^T]  =>  A^T x_a lies in both.
  std::vector<Mat> blocks{a.embedding(), b.embedding().scaled(a.p() - 1)};
  Subspace k = kernel(hstack(blocks, a.ambient(), a.p()));
  std::vector<Vec> vs;
  for (const Vec& x : k.basis_vectors()) {
    Vec xa(x.begin(), x.begin() + a.dim());
    vs.push_back(a.from_coordinates(xa));
  }
  return Subspace::span(vs, a.ambient(), a.p());
}

Subspace kernel(const Mat& m) {
  Echelon e = rref(m);
  std::vector<int> free = non_pivots(e.pivots, m.cols());
  std::vector<Vec> vs;
  for (int f : free) {
    Vec v = zero_vec(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      v[e.pivots[i]] = negate(e.reduced(static_cast<int>(i), f), m.p());
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, m.cols(), m.p());
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient()) throw Error(ErrorKind::DimensionMismatch, "image of subspace");
  return image(m * s.embedding());
}

Subspace preimage(const Mat& m, const Subspace& s) {
  if (m.rows() != s.ambient()) throw Error(ErrorKind::DimensionMismatch, "preimage of subspace");
  // v maps into s iff the quotient projection kills m v.
  Quotient q = quotient_with_section(s);
  return kernel(q.projection * m);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve");
  Mat bcol = Mat::from_columns({b}, m.rows(), m.p());
  std::vector<Mat> blocks{m, bcol};
  Echelon e = rref(hstack(blocks, m.rows(), m.p()));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    x[e.pivots[i]] = e.reduced(static_cast<int>(i), m.cols());
  }
  return x;
}

Quotient quotient_with_section(const Subspace& sub) {
  const int n = sub.ambient();
  const int p = sub.p();
  std::vector<int> free = non_pivots(sub.pivots(), n);
  Quotient q;
  q.dim = static_cast<int>(free.size());
  q.projection = Mat(q.dim, n, p);
  q.section = Mat(n, q.dim, p);
  // projection(v) = free coordinates of residue(v); residue is linear, so
  // column j of the projection is the free part of residue(e_j).
  for (int j = 0; j < n; ++j) {
    Vec r = sub.residue(unit_vec(n, j));
    for (int i = 0; i < q.dim; ++i) q.projection.set(i, j, r[free[i]]);
  }
  for (int i = 0; i < q.dim; ++i) q.section.set(free[i], i, 1);
  return q;
}

}  // namespace picseq::exactla

namespace picseq::exactla {

std::uint64_t element_count(const Subspace& s) noexcept {
  std::uint64_t n = 1;
  for (int i = 0; i < s.dim(); ++i) {
    if (n > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(s.p())) return UINT64_MAX;
    n *= static_cast<std::uint64_t>(s.p());
  }
  return n;
}

bool next_coordinates(Vec& c, int p) noexcept {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

std::vector<Vec> elements(const Subspace& s, std::uint64_t limit) {
  std::uint64_t n = element_count(s);
  if (n > limit) {
    throw Error(ErrorKind::SearchTooLarge,
                "subspace of dimension " + std::to_string(s.dim()) + " over F" +
                    std::to_string(s.p()) + " exceeds the enumeration limit");
  }
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(n));
  Vec c = zero_vec(s.dim());
  do {
    out.push_back(s.from_coordinates(c));
  } while (next_coordinates(c, s.p()));
  return out;
}

}  // namespace picseq::exactla
