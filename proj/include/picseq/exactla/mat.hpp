#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "picseq/exactla/field.hpp"

namespace picseq::exactla {

/// Column vector over F_p; the characteristic travels with the Mat or
/// Subspace it is used with.
using Vec = std::vector<Residue>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
Vec add(const Vec& a, const Vec& b, int p);
Vec sub(const Vec& a, const Vec& b, int p);
Vec scaled(const Vec& a, Residue c, int p);
bool is_zero(const Vec& v) noexcept;

/// Dense row-major matrix over F_p. Acts on column vectors.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, int p);

  static Mat identity(int n, int p);
  static Mat from_rows(const std::vector<std::vector<long long>>& rows, int p, int cols = -1);
  static Mat from_columns(const std::vector<Vec>& cols, int rows, int p);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int p() const noexcept { return p_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, long long v) { data_[index(r, c)] = reduce(v, p_); }

  std::span<Residue> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const Residue> row(int r) const {
    return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }
  Vec row_vec(int r) const;
  Vec col(int c) const;
  void set_col(int c, const Vec& v);

  Mat transpose() const;
  bool is_zero() const noexcept;

  Mat operator*(const Mat& rhs) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat scaled(Residue c) const;
  Mat& operator+=(const Mat& rhs);

  friend bool operator==(const Mat& a, const Mat& b) = default;

  /// Canonical textual form; equal matrices have equal keys.
  std::string key() const;

  /// Row-major flattening (used to vectorize homomorphism spaces).
  const std::vector<Residue>& data() const noexcept { return data_; }
  static Mat reshape(const Vec& flat, int rows, int cols, int p);

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<Residue> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat hstack(std::span<const Mat> blocks, int rows, int p);
Mat vstack(std::span<const Mat> blocks, int cols, int p);
Mat block_diag(const Mat& a, const Mat& b);

struct Echelon {
  Mat reduced;
  std::vector<int> pivots;
};

/// Reduced row-echelon form; row space is preserved.
Echelon rref(Mat m);
int rank(const Mat& m);
bool is_invertible(const Mat& m);
/// Throws Error{NotInvertible} for singular or non-square input.
Mat inverse(const Mat& m);

}  // namespace picseq::exactla
