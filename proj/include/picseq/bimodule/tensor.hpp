#pragma once

#include <functional>
#include <utility>

#include "picseq/bimodule/bimodule.hpp"

namespace picseq::bimodule {

/// m ⊗_A n for A = m.right = n.left, realized as the quotient of the
/// Kronecker space (index i * dn + j for m_i ⊗ n_j) by the balancing relations.
struct TensorProduct {
  Bimodule module;
  Mat projection;  // dim x (dm * dn)
  Mat section;     // (dm * dn) x dim, each column a single basis tensor
  int dm = 0;
  int dn = 0;
  Subspace relations;

  /// Class of x ⊗ y.
  Vec pure(const Vec& x, const Vec& y) const;
  /// Class of m_i ⊗ n_j.
  Vec pure_basis(int i, int j) const;
  /// The basis tensor m_i ⊗ n_j chosen as representative of coordinate k.
  std::pair<int, int> representative(int k) const;
};

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);

/// Given a linear map F on the Kronecker space that kills the balancing
/// relations, returns the induced map on the tensor product (F * section).
/// Throws Error{NotBilinear} when F is not balanced.
Mat descend(const Mat& f, const TensorProduct& t);

/// Induced map built from values on basis tensors: value(i, j) is the
/// image of m_i ⊗ n_j in a space of dimension target_dim.
Mat descend_from_basis(const TensorProduct& t, int target_dim,
                       const std::function<Vec(int, int)>& value);

/// f ⊗ g : t1 -> t2 for a right-linear f and left-linear g.
Mat tensor_maps(const TensorProduct& t1, const TensorProduct& t2, const Mat& f, const Mat& g);

/// Action isomorphisms A ⊗_A n -> n and m ⊗_A A -> m (t must be the
/// corresponding tensor product with the regular bimodule).
Mat left_action_map(const TensorProduct& t, const Bimodule& n);
Mat right_action_map(const TensorProduct& t, const Bimodule& m);

}  // namespace picseq::bimodule
