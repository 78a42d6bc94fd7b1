#pragma once

#include "picseq/algebra/algebra.hpp"

namespace picseq::algebra {

/// R ⊆ S sharing the local units of S. R is materialized as an Algebra whose
/// basis is the RREF basis of r_space; `inclusion` maps R-coordinates to
/// S-coordinates.
struct RingExtension {
  AlgebraPtr S;
  Subspace r_space;
  AlgebraPtr R;  // null when r_space is not a subalgebra containing the units
  Mat inclusion;

  Vec to_s(const Vec& r) const { return inclusion * r; }
  /// R-coordinates of an element of S lying in r_space; throws otherwise.
  Vec to_r(const Vec& s) const;
};

RingExtension make_extension(AlgebraPtr s, Subspace r_space);

ValidationReport validate_extension(const RingExtension& ext);

}  // namespace picseq::algebra
