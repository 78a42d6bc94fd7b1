#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picseq/bimodule/hom.hpp"
#include "picseq/bimodule/tensor.hpp"

namespace picseq::bimodule {

/// Witnesses that P is invertible over A: r: Q ⊗_A P -> A and
/// l: P ⊗_A Q -> A, both bilinear isomorphisms. l is stored normalized so
/// that l(p ⊗ q) p' = p r(q ⊗ p') holds on all basis triples.
struct PicardPair {
  AlgebraPtr base;
  Bimodule P;
  Bimodule Q;
  TensorProduct qp;  // Q ⊗_A P
  TensorProduct pq;  // P ⊗_A Q
  Mat r;             // base.dim x qp.dim
  Mat l;             // base.dim x pq.dim
  Mat correction;    // l = correction * (supplied l); identity if none supplied

  Vec r_of(const Vec& q, const Vec& p) const { return r * qp.pure(q, p); }
  Vec l_of(const Vec& p, const Vec& q) const { return l * pq.pure(p, q); }
};

/// Builds and verifies a pair. When l is omitted it is solved for from r.
/// Throws Error{WitnessesInvalid} for non-bilinear or non-invertible maps
/// and Error{CoherenceFailure} when the normalized pair is not coherent.
PicardPair make_picard_pair(const Bimodule& p, const Bimodule& q, const Mat& r,
                            const std::optional<Mat>& l = std::nullopt);

/// (A, A, multiplication, multiplication).
PicardPair trivial_pair(const AlgebraPtr& a);

/// The same witnesses read from Q's side: (Q, P, l, r).
PicardPair swapped(const PicardPair& pair);

struct CoherenceReport {
  bool triangle_left = true;   // l(p⊗q) p' = p r(q⊗p')
  bool triangle_right = true;  // r(q⊗p) q' = q l(p⊗q')
  bool pentagon_left = true;   // five-fold identity on P⊗Q⊗P⊗Q⊗P
  bool pentagon_right = true;  // five-fold identity on Q⊗P⊗Q⊗P⊗Q
  std::vector<std::string> failures;

  bool ok() const { return triangle_left && triangle_right && pentagon_left && pentagon_right; }
};

CoherenceReport check_coherence(const PicardPair& pair);

/// N ⊗_A Q -> Hom_A(P, N)A for a module N with N.right = A.
struct TensorToHom {
  TensorProduct nq;
  HomModule hom;
  Mat map;  // hom.module.dim x nq.module.dim
};

/// Evaluates n ⊗ q ↦ (p ↦ n r(q' l(p' ⊗ q) ⊗ p)) summed over r^{-1}(e) = Σ q' ⊗ p'
/// for a local unit e common to n, q, p. Throws Error{WitnessesInvalid}
/// when the result is not bijective.
TensorToHom tensor_to_hom(const PicardPair& pair, const Bimodule& n);

/// The multiplication isomorphisms attached to an invertible pair X, Y ⊆ S.
struct MultiplicationIsos {
  Bimodule x_rr;         // X over (R, R)
  Bimodule y_rr;
  TensorProduct s_x;     // S ⊗_R X
  TensorProduct x_s;     // X ⊗_R S
  TensorProduct x_y;     // X ⊗_R Y
  Mat left_mult;         // S ⊗_R X -> S
  Mat right_mult;        // X ⊗_R S -> S
  Mat unit_map;          // R -> X ⊗_R Y
  Mat right_mult_inverse;  // S -> X ⊗_R S, built from unit_map
  bool left_invertible = false;
  bool right_invertible = false;
  bool unit_invertible = false;
  bool inverse_matches = false;  // right_mult_inverse is the inverse of right_mult
  bool unit_choice_independent = true;
};

/// Throws Error{NotInvertiblePair} unless XY = YX = R as product spans.
MultiplicationIsos multiplication_isos(const ExtensionModules& v, const Subspace& x, const Subspace& y);

/// span{x y : x in X, y in Y} inside S.
Subspace product_span(const algebra::Algebra& s, const Subspace& x, const Subspace& y);

}  // namespace picseq::bimodule
