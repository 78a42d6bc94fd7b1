#pragma once

#include <string>
#include <vector>

#include "picseq/algebra/extension.hpp"

namespace picseq::bimodule {

using algebra::AlgebraPtr;
using algebra::ValidationReport;
using exactla::Mat;
using exactla::Residue;
using exactla::Subspace;
using exactla::Vec;

/// A finite-dimensional bimodule over (left, right). left_act[i] is the matrix
/// of m -> b_i m; right_act[j] is the matrix of m -> m b_j, so the right
/// action composes contravariantly: right_of(ab) = right_of(b) right_of(a).
/// Algebras are compared by identity.
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  int dim = 0;
  std::vector<Mat> left_act;
  std::vector<Mat> right_act;

  int p() const { return left->p(); }
  Mat left_of(const Vec& a) const;
  Mat right_of(const Vec& b) const;
};

enum class Linearity { LeftOnly, RightOnly, Bilinear };

const char* to_string(Linearity lin) noexcept;

/// Checks both module axioms on basis pairs and that the actions commute.
ValidationReport validate_bimodule(const Bimodule& m);

/// A as a bimodule over itself.
Bimodule regular(const AlgebraPtr& a);

Bimodule zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right);

/// Pull the actions back along algebra homomorphisms: left_hom maps
/// new_left-coordinates to m.left-coordinates, likewise right_hom.
Bimodule restrict(const Bimodule& m, const AlgebraPtr& new_left, const Mat& left_hom,
                  const AlgebraPtr& new_right, const Mat& right_hom);

/// The sub-bimodule carried by `space` (assumed stable), in the coordinates
/// of space's RREF basis.
Bimodule sub_bimodule(const Bimodule& m, const Subspace& space);

/// True when space is stable under both actions.
bool is_stable(const Bimodule& m, const Subspace& space);

/// Smallest sub-bimodule containing the given vectors.
Subspace closure(const Bimodule& m, const std::vector<Vec>& gens);

Bimodule direct_sum(const Bimodule& a, const Bimodule& b);

/// Same space and left action, right action through the algebra map phi
/// (matrix on right-algebra coordinates). Throws Error{NotMultiplicative}
/// unless phi is a multiplicative bijection.
Bimodule twist(const Bimodule& m, const Mat& phi);

/// True iff the local units span the module from each side.
bool check_unital(const Bimodule& m);

/// span{u m v : u, v local units, m basis}.
Subspace unital_part(const Bimodule& m);
Bimodule largest_unital(const Bimodule& m);

/// f: source -> target intertwines the requested actions.
bool is_linear(const Bimodule& source, const Bimodule& target, const Mat& f, Linearity lin);

/// Throws Error{IncompatibleAlgebras} when the requested sides do not share algebras.
void require_compatible(const Bimodule& a, const Bimodule& b, Linearity lin);

/// True when the algebra maps x -> phi(x) preserve products of basis pairs.
bool is_multiplicative(const algebra::Algebra& a, const Mat& phi);

/// The standard bimodule views of an extension R ⊆ S.
struct ExtensionModules {
  algebra::RingExtension ext;
  Bimodule r_reg;  // R over (R, R)
  Bimodule s_reg;  // S over (S, S)
  Bimodule s_rr;   // S over (R, R)
  Bimodule s_sr;   // S over (S, R)
  Bimodule s_rs;   // S over (R, S)

  /// An S-bimodule viewed over (R, R), (S, R) or (R, S).
  Bimodule as_rr(const Bimodule& x) const;
  Bimodule as_sr(const Bimodule& x) const;
  Bimodule as_rs(const Bimodule& x) const;
};

/// Requires ext.R to be built (see validate_extension).
ExtensionModules make_extension_modules(const algebra::RingExtension& ext);

}  // namespace picseq::bimodule
