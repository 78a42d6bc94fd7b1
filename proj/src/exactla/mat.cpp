#include "picseq/exactla/mat.hpp"

#include <sstream>

#include "picseq/error.hpp"
#include "picseq/exactla/kernels.hpp"

namespace picseq::exactla {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p()) {
    std::ostringstream os;
    os << op << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

}  // namespace

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), 0); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b, int p) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector add");
  Vec out = a;
  kernels::axpy(out, b, 1, p);
  return out;
}

Vec sub(const Vec& a, const Vec& b, int p) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sub");
  Vec out = a;
  kernels::axpy(out, b, p - 1, p);
  return out;
}

Vec scaled(const Vec& a, Residue c, int p) {
  Vec out = a;
  kernels::scale(out, reduce(c, p), p);
  return out;
}

bool is_zero(const Vec& v) noexcept {
  for (Residue x : v) {
    if (x != 0) return false;
  }
  return true;
}

Mat::Mat(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  require_supported_prime(p);
  if (rows < 0 || cols < 0) throw Error(ErrorKind::DimensionMismatch, "negative matrix size");
}

Mat Mat::identity(int n, int p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.data_[m.index(i, i)] = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows, int p, int cols) {
  int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
  Mat m(static_cast<int>(rows.size()), c, p);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != c) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m.set(r, j, rows[r][j]);
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, int rows, int p) {
  Mat m(rows, static_cast<int>(cols.size()), p);
  for (int j = 0; j < m.cols_; ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row_vec(int r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Mat::col(int c) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[r] = data_[index(r, c)];
  return v;
}

void Mat::set_col(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw Error(ErrorKind::DimensionMismatch, "set_col");
  for (int r = 0; r < rows_; ++r) data_[index(r, c)] = reduce(v[r], p_);
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.data_[t.index(c, r)] = data_[index(r, c)];
  }
  return t;
}

bool Mat::is_zero() const noexcept { return exactla::is_zero(data_); }

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_) {
    std::ostringstream os;
    os << "matrix product " << rows_ << "x" << cols_ << " * " << rhs.rows_ << "x" << rhs.cols_;
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  Mat out(rows_, rhs.cols_, p_);
  if (rhs.cols_ == 0) return out;
  for (int i = 0; i < rows_; ++i) {
    auto dst = out.row(i);
    for (int k = 0; k < cols_; ++k) {
      Residue a = data_[index(i, k)];
      if (a != 0) kernels::axpy(dst, rhs.row(k), a, p_);
    }
  }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  }
  Vec out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < cols_; ++k) acc += static_cast<std::int64_t>(data_[index(i, k)]) * v[k];
    out[i] = reduce(acc, p_);
  }
  return out;
}

Mat Mat::operator+(const Mat& rhs) const {
  Mat out = *this;
  out += rhs;
  return out;
}

Mat& Mat::operator+=(const Mat& rhs) {
  require_same_shape(*this, rhs, "matrix sum");
  kernels::axpy(data_, rhs.data_, 1, p_);
  return *this;
}

Mat Mat::operator-(const Mat& rhs) const {
  require_same_shape(*this, rhs, "matrix difference");
  Mat out = *this;
  kernels::axpy(out.data_, rhs.data_, p_ - 1, p_);
  return out;
}

Mat Mat::scaled(Residue c) const {
  Mat out = *this;
  kernels::scale(out.data_, reduce(c, p_), p_);
  return out;
}

std::string Mat::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << ';';
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << data_[index(r, c)];
    }
  }
  os << ']';
  return os.str();
}

Mat Mat::reshape(const Vec& flat, int rows, int cols, int p) {
  if (static_cast<int>(flat.size()) != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "reshape");
  }
  Mat m(rows, cols, p);
  for (std::size_t i = 0; i < flat.size(); ++i) m.data_[i] = reduce(flat[i], p);
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.p() != b.p()) throw Error(ErrorKind::DimensionMismatch, "kron over different fields");
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      Residue x = a(i, j);
      if (x == 0) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, static_cast<long long>(x) * b(k, l));
        }
      }
    }
  }
  return out;
}

Mat hstack(std::span<const Mat> blocks, int rows, int p) {
  int cols = 0;
  for (const Mat& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "hstack row count");
    cols += b.cols();
  }
  Mat out(rows, cols, p);
  int offset = 0;
  for (const Mat& b : blocks) {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < b.cols(); ++c) out.set(r, offset + c, b(r, c));
    }
    offset += b.cols();
  }
  return out;
}

Mat vstack(std::span<const Mat> blocks, int cols, int p) {
  int rows = 0;
  for (const Mat& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack column count");
    rows += b.rows();
  }
  Mat out(rows, cols, p);
  int offset = 0;
  for (const Mat& b : blocks) {
    for (int r = 0; r < b.rows(); ++r) {
      for (int c = 0; c < cols; ++c) out.set(offset + r, c, b(r, c));
    }
    offset += b.rows();
  }
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.set(a.rows() + r, a.cols() + c, b(r, c));
  return out;
}

Echelon rref(Mat m) {
  const int p = m.p();
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int found = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != lead) {
      auto a = m.row(found);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    kernels::scale(m.row(lead), inverse(m(lead, c), p), p);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      Residue x = m(r, c);
      if (x != 0) kernels::axpy(m.row(r), m.row(lead), p - x, p);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
  const int n = m.rows();
  std::vector<Mat> blocks{m, Mat::identity(n, m.p())};
  Echelon e = rref(hstack(blocks, n, m.p()));
  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(e.pivots.size()) || e.pivots[i] != i) {
      throw Error(ErrorKind::NotInvertible, "singular matrix");
    }
  }
  Mat inv(n, n, m.p());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.set(r, c, e.reduced(r, n + c));
  return inv;
}

}  // namespace picseq::exactla
