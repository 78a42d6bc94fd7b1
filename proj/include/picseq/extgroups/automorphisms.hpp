#pragma once

#include <map>
#include <memory>
#include <optional>

#include "picseq/extgroups/subbimodules.hpp"

namespace picseq::extgroups {

/// A group of invertible linear maps S -> S under composition, keyed by matrix.
struct MapGroup {
  FiniteGroup group;
  std::shared_ptr<const std::map<Key, Mat>> maps;

  const Mat& at(const Key& k) const;
};

MapGroup make_map_group(std::string name, std::vector<Mat> maps, int n, int p);

/// Invertible (S, R)-bilinear endomorphisms of S.
MapGroup bilinear_automorphisms(const ExtensionModules& v);

/// Multiplicative bijective R-bilinear endomorphisms of S fixing R pointwise.
MapGroup ring_automorphisms_over_base(const ExtensionModules& v);

/// λ ↦ λ^{-1}(R), with λ(R) as the partner. Throws Error{Internal} if the
/// pair is not invertible.
InvElem base_preimage(const ExtensionModules& v, const Mat& lambda);

/// s ↦ λ^{-1}(e) s λ(e) with e the first local unit fixing s. When
/// unit_independent is given it records whether every admissible unit gives
/// the same value.
Mat induced_automorphism(const ExtensionModules& v, const Mat& lambda, bool* unit_independent = nullptr);

/// λ(e) λ^{-1}(e) = e = λ^{-1}(e) λ(e) for every local unit e.
bool unit_inverse_identity(const ExtensionModules& v, const Mat& lambda);

/// S with right action through phi.
Bimodule twisted_regular(const ExtensionModules& v, const Mat& phi);

/// An S-bilinear isomorphism S -> S_phi, if [S_phi] = [S].
std::optional<Mat> twist_trivial_witness(const ExtensionModules& v, const Mat& phi);

struct BaseKernelReport {
  FiniteGroup kernel;
  FiniteGroup described;   // {λ : λ(e) ∈ U(Z(eRe)) for all e}
  bool matches = false;
  bool central = false;
};

struct InducedKernelReport {
  FiniteGroup kernel;
  FiniteGroup described;   // {λ : λ(e) ∈ U(Z(eSe)) for all e}
  FiniteGroup bimodule_maps;  // invertible S-bilinear endomorphisms
  bool matches_corners = false;
  bool matches_bimodule_maps = false;
};

BaseKernelReport base_kernel_report(const ExtensionModules& v, const MapGroup& aut_sr, const InvGroup& inv);
InducedKernelReport induced_kernel_report(const ExtensionModules& v, const MapGroup& aut_sr,
                                          const MapGroup& aut_rrings);

}  // namespace picseq::extgroups
