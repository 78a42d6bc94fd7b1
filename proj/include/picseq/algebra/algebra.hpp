#pragma once

#include <memory>
#include <string>
#include <vector>

#include "picseq/exactla/subspace.hpp"

namespace picseq::algebra {

using exactla::Mat;
using exactla::Residue;
using exactla::Subspace;
using exactla::Vec;

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;

  void fail(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

/// Finite-dimensional associative F_p-algebra given by structure constants,
/// together with a declared finite set of idempotent local units.
class Algebra {
 public:
  /// products[i * n + j] is the coefficient vector of b_i * b_j.
  Algebra(int p, std::vector<std::string> basis_names, std::vector<Vec> products,
          std::vector<Vec> local_units);

  int p() const noexcept { return p_; }
  int dim() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const std::vector<Vec>& local_units() const noexcept { return units_; }

  const Vec& product(int i, int j) const { return products_.at(static_cast<std::size_t>(i * dim() + j)); }
  Vec multiply(const Vec& a, const Vec& b) const;

  /// Matrix of x -> b_i x (resp. x -> x b_i).
  const Mat& left_mult(int i) const { return left_.at(static_cast<std::size_t>(i)); }
  const Mat& right_mult(int i) const { return right_.at(static_cast<std::size_t>(i)); }
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;

  /// True when u x = x u = x.
  bool fixes(const Vec& u, const Vec& x) const;

  std::string format(const Vec& v) const;

 private:
  int p_;
  std::vector<std::string> names_;
  std::vector<Vec> products_;
  std::vector<Vec> units_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

ValidationReport validate_algebra(const Algebra& a);

/// Indices into local_units() of every u with u x = x u = x for all x.
std::vector<int> units_for(const Algebra& a, const std::vector<Vec>& elems);

/// First local unit (in declared order) fixing every element of elems.
/// Throws Error{Validation} if there is none.
int unit_for(const Algebra& a, const std::vector<Vec>& elems);

/// Span of {e x e : x in A}.
Subspace corner(const Algebra& a, const Vec& e);

/// Central elements of the corner eAe that are invertible there (z z' = e).
std::vector<Vec> corner_center_units(const Algebra& a, const Vec& e);

}  // namespace picseq::algebra
