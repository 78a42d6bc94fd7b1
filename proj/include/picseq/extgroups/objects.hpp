#pragma once

#include <optional>
#include <string>
#include <utility>

#include "picseq/bimodule/picard.hpp"
#include "picseq/extgroups/subbimodules.hpp"

namespace picseq::extgroups {

using bimodule::PicardPair;
using bimodule::TensorProduct;

/// (P, φ, X): P a unital R-bimodule, X a unital S-bimodule, φ: P -> X
/// R-bilinear with both induced maps P ⊗_R S -> X and S ⊗_R P -> X bijective.
struct MsrObject {
  Bimodule P;            // over (R, R)
  Bimodule X;            // over (S, S)
  Mat phi;               // X.dim x P.dim
  TensorProduct p_s;     // P ⊗_R S
  TensorProduct s_p;     // S ⊗_R P
  Mat right_induced;     // p ⊗ s ↦ φ(p) s
  Mat left_induced;      // t ⊗ p ↦ t φ(p)
  PicardPair pic_p;      // over R
  PicardPair pic_x;      // over S
};

/// Builds and verifies an object. Throws Error{NotBilinear} if φ is not
/// R-bilinear, Error{NotInvertible} naming the side whose induced map fails,
/// Error{WitnessesInvalid} when the Picard witnesses are for other modules.
MsrObject make_object(const ExtensionModules& v, const Bimodule& p, const Bimodule& x, const Mat& phi,
                      const PicardPair& pic_p, const PicardPair& pic_x);

struct InducedMapsReport {
  bool preconditions_met = false;  // Picard witnesses present and valid
  bool right_iso = false;
  bool left_iso = false;
  bool injective = false;
  /// right_iso == left_iso, and injectivity when either holds; only
  /// meaningful when preconditions_met.
  bool equivalence_holds = false;
  std::string note;
};

/// Computes both induced maps independently of make_object.
InducedMapsReport induced_maps_report(const ExtensionModules& v, const Bimodule& p, const Bimodule& x,
                                      const Mat& phi, const std::optional<PicardPair>& pic_p,
                                      const std::optional<PicardPair>& pic_x);

/// (R, ι, S).
MsrObject neutral_object(const ExtensionModules& v);

/// (X, ⊆, S) for X in Inv, with multiplication witnesses from its partner.
MsrObject inclusion_object(const ExtensionModules& v, const InvElem& x);

/// (R, ι_γ, S_γ) where S_γ has right action through γ.
MsrObject twisted_unit_object(const ExtensionModules& v, const Mat& gamma);

/// (P ⊗_R Q, ω ∘ (φ ⊗ ψ), X ⊗_S Y).
MsrObject object_product(const ExtensionModules& v, const MsrObject& a, const MsrObject& b);

struct InverseResult {
  MsrObject object;
  Mat psi;
  bool square_commutes = false;  // l' ∘ ω ∘ (φ ⊗ ψ) = ι ∘ l
};

/// (Q, ψ, Y) with ψ = act ∘ Γ_S^{-1} ∘ φ* ∘ Θ_R ∘ (Q ≅ R ⊗_R Q).
/// Throws Error{CoherenceFailure} if the square does not commute.
InverseResult object_inverse(const ExtensionModules& v, const MsrObject& a);

/// (α, β) with α: P -> P' R-bilinear, β: X -> X' S-bilinear, both
/// invertible and φ' α = β φ.
std::optional<std::pair<Mat, Mat>> object_class_iso(const MsrObject& a, const MsrObject& b);

/// [X] = [S] with an S-bilinear witness X -> S.
std::optional<Mat> right_component_witness(const ExtensionModules& v, const MsrObject& a);
/// [P] = [R] with an R-bilinear witness R -> P.
std::optional<Mat> left_component_witness(const ExtensionModules& v, const MsrObject& a);

/// Picard witnesses of X ⊆ S over R from its partner Y (multiplication maps).
PicardPair subbimodule_pair(const ExtensionModules& v, const InvElem& x);

/// Picard witnesses of S_γ over S: S_{γ^{-1}} with m ⊗ n ↦ m γ^{-1}(n).
PicardPair twisted_pair(const ExtensionModules& v, const Mat& gamma);

}  // namespace picseq::extgroups
