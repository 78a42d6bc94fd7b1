#include "picseq/algebra/algebra.hpp"

#include <sstream>

#include "picseq/error.hpp"
#include "picseq/exactla/kernels.hpp"

namespace picseq::algebra {

using exactla::reduce;

Algebra::Algebra(int p, std::vector<std::string> basis_names, std::vector<Vec> products,
                 std::vector<Vec> local_units)
    : p_(p), names_(std::move(basis_names)), products_(std::move(products)), units_(std::move(local_units)) {
  exactla::require_supported_prime(p);
  const int n = dim();
  if (static_cast<int>(products_.size()) != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "structure constants: expected n*n products");
  }
  for (Vec& v : products_) {
    if (static_cast<int>(v.size()) != n) throw Error(ErrorKind::DimensionMismatch, "structure constant length");
    for (Residue& x : v) x = reduce(x, p);
  }
  for (Vec& u : units_) {
    if (static_cast<int>(u.size()) != n) throw Error(ErrorKind::DimensionMismatch, "local unit length");
    for (Residue& x : u) x = reduce(x, p);
  }
  for (int i = 0; i < n; ++i) {
    Mat l(n, n, p);
    Mat r(n, n, p);
    for (int j = 0; j < n; ++j) {
      l.set_col(j, product(i, j));
      r.set_col(j, product(j, i));
    }
    left_.push_back(std::move(l));
    right_.push_back(std::move(r));
  }
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  return left_mult(a) * b;
}

Mat Algebra::left_mult(const Vec& a) const {
  Mat m(dim(), dim(), p_);
  for (int i = 0; i < dim(); ++i) {
    if (a.at(static_cast<std::size_t>(i)) != 0) m += left_[i].scaled(a[i]);
  }
  return m;
}

Mat Algebra::right_mult(const Vec& a) const {
  Mat m(dim(), dim(), p_);
  for (int i = 0; i < dim(); ++i) {
    if (a.at(static_cast<std::size_t>(i)) != 0) m += right_[i].scaled(a[i]);
  }
  return m;
}

bool Algebra::fixes(const Vec& u, const Vec& x) const {
  return multiply(u, x) == x && multiply(x, u) == x;
}

std::string Algebra::format(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] != 1) os << v[i] << "*";
    os << names_[i];
  }
  if (first) os << "0";
  return os.str();
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        // (b_i b_j) b_k == b_i (b_j b_k)
        Vec lhs = a.right_mult(k) * a.product(i, j);
        Vec rhs = a.left_mult(i) * a.product(j, k);
        if (lhs != rhs) {
          rep.fail("associativity fails on basis triple (" + a.basis_names()[i] + ", " +
                   a.basis_names()[j] + ", " + a.basis_names()[k] + ")");
        }
      }
    }
  }
  const auto& units = a.local_units();
  if (units.empty()) rep.fail("no local units declared");
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (a.multiply(units[u], units[u]) != units[u]) {
      rep.fail("local unit #" + std::to_string(u) + " (" + a.format(units[u]) + ") is not idempotent");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (units_for(a, {exactla::unit_vec(n, i)}).empty()) {
      rep.fail("no local unit fixes basis element " + a.basis_names()[i]);
    }
  }
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t v = u + 1; v < units.size(); ++v) {
      if (units_for(a, {units[u], units[v]}).empty()) {
        rep.fail("local units #" + std::to_string(u) + " and #" + std::to_string(v) +
                 " have no common local unit");
      }
    }
  }
  return rep;
}

std::vector<int> units_for(const Algebra& a, const std::vector<Vec>& elems) {
  std::vector<int> out;
  const auto& units = a.local_units();
  for (std::size_t u = 0; u < units.size(); ++u) {
    bool ok = true;
    for (const Vec& x : elems) {
      if (!a.fixes(units[u], x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<int>(u));
  }
  return out;
}

int unit_for(const Algebra& a, const std::vector<Vec>& elems) {
  auto all = units_for(a, elems);
  if (all.empty()) throw Error(ErrorKind::Validation, "no local unit fixes the given elements");
  return all.front();
}

Subspace corner(const Algebra& a, const Vec& e) {
  return exactla::image(a.left_mult(e) * a.right_mult(e));
}

std::vector<Vec> corner_center_units(const Algebra& a, const Vec& e) {
  const int p = a.p();
  Subspace c = corner(a, e);
  const int k = c.dim();
  // z = sum x_i c_i is central iff z c_j - c_j z = 0 for all j.
  std::vector<exactla::Mat> blocks;
  for (int j = 0; j < k; ++j) {
    Vec cj = c.basis().row_vec(j);
    Mat comm = a.right_mult(cj) - a.left_mult(cj);
    blocks.push_back(comm * c.embedding());
  }
  Subspace center_coords = blocks.empty() ? Subspace::whole(k, p)
                                          : exactla::kernel(exactla::vstack(blocks, k, p));
  std::vector<Vec> out;
  for (const Vec& x : exactla::elements(center_coords, 1u << 20)) {
    Vec z = c.from_coordinates(x);
    // solve z * z' = e with z' in the corner
    Mat lz = a.left_mult(z) * c.embedding();
    auto sol = exactla::solve(lz, e);
    if (!sol) continue;
    Vec zinv = c.from_coordinates(*sol);
    if (a.multiply(zinv, z) == e) out.push_back(z);
  }
  return out;
}

}  // namespace picseq::algebra
