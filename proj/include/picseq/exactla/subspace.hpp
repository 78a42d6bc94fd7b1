#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "picseq/exactla/mat.hpp"

namespace picseq::exactla {

/// A subspace of F_p^n stored by its reduced row-echelon basis. Two
/// subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F_p^ambient.
  Subspace(int ambient, int p);

  static Subspace span(const std::vector<Vec>& vectors, int ambient, int p);
  static Subspace row_space(const Mat& m);
  static Subspace whole(int ambient, int p);

  int ambient() const noexcept { return ambient_; }
  int p() const noexcept { return p_; }
  int dim() const noexcept { return basis_.rows(); }

  /// Rows are the RREF basis vectors.
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  std::vector<Vec> basis_vectors() const;

  /// Remainder of v after clearing the pivot coordinates; zero iff v is inside.
  Vec residue(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis() when v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Inverse of coordinates(): sum of c_i * basis row i.
  Vec from_coordinates(const Vec& c) const;
  /// ambient x dim matrix whose columns are the basis vectors.
  Mat embedding() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  std::string key() const;

 private:
  int ambient_ = 0;
  int p_ = 2;
  Mat basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Null space of m (a subspace of F_p^cols).
Subspace kernel(const Mat& m);
/// Column space of m (a subspace of F_p^rows).
Subspace image(const Mat& m);
/// Image of a subspace under m.
Subspace image(const Mat& m, const Subspace& s);
/// Preimage {v : m v in s}.
Subspace preimage(const Mat& m, const Subspace& s);
/// Some x with m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

struct Quotient {
  int dim = 0;
  Mat projection;  // dim x ambient, kernel = sub
  Mat section;     // ambient x dim, projection * section = identity
};

Quotient quotient_with_section(const Subspace& sub);

}  // namespace picseq::exactla

namespace picseq::exactla {

/// Number of elements of s, or UINT64_MAX when it exceeds 2^62.
std::uint64_t element_count(const Subspace& s) noexcept;

/// All elements of s in lexicographic order of their coordinates.
/// Throws Error{SearchTooLarge} when there are more than `limit`.
std::vector<Vec> elements(const Subspace& s, std::uint64_t limit);

/// Advances a coordinate vector through F_p^k lexicographically; returns
/// false after the last one.
bool next_coordinates(Vec& c, int p) noexcept;

}  // namespace picseq::exactla
