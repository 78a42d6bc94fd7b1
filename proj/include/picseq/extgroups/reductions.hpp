#pragma once

#include "picseq/extgroups/automorphisms.hpp"
#include "picseq/extgroups/objects.hpp"

namespace picseq::extgroups {

/// From an S-bilinear isomorphism ω: S -> S_φ, the (S, R)-bilinear
/// automorphism λ = ω, checked to induce φ. Throws Error{NotBilinear} when
/// ω does not intertwine, Error{Internal} when λ does not induce φ.
Mat automorphism_from_twist_iso(const ExtensionModules& v, const Mat& phi, const Mat& omega);

/// For an object with an S-bilinear isomorphism β: X -> S, the copy
/// V = β(φ(P)) of P inside S, located in Inv. Throws Error{NotBilinear}
/// when β is not an S-bilinear isomorphism.
InvElem subbimodule_from_trivial_codomain(const ExtensionModules& v, const InvGroup& inv, const MsrObject& a,
                                          const Mat& beta);

struct TrivialDomainReduction {
  Mat gamma;
  Mat alpha;  // S ≅ R ⊗_R S -> P ⊗_R S -> X
  Mat beta;   // S ≅ S ⊗_R R -> S ⊗_R P -> X
};

/// For an object with an R-bilinear isomorphism f: R -> P, γ = β^{-1} α.
/// Checks γ is multiplicative, fixes R, and β: S_γ -> X is S-bilinear;
/// throws Error{NotBilinear} / Error{NotMultiplicative} otherwise.
TrivialDomainReduction automorphism_from_trivial_domain(const ExtensionModules& v, const MsrObject& a,
                                                        const Mat& f);

}  // namespace picseq::extgroups
