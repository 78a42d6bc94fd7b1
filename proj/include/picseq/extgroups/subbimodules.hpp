#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "picseq/bimodule/bimodule.hpp"
#include "picseq/groupkit/group.hpp"

namespace picseq::extgroups {

using bimodule::Bimodule;
using bimodule::ExtensionModules;
using exactla::Mat;
using exactla::Subspace;
using exactla::Vec;
using groupkit::FiniteGroup;
using groupkit::Key;

inline constexpr std::uint64_t kVectorEnumerationLimit = std::uint64_t{1} << 16;

/// Every sub-bimodule of m, found by closing {0} under "add one vector and
/// take the generated sub-bimodule". Sorted by (dimension, key).
std::vector<Subspace> all_sub_bimodules(const Bimodule& m, std::uint64_t limit = kVectorEnumerationLimit);

/// A unital R-sub-bimodule X of S with its partner Y: XY = YX = R.
struct InvElem {
  Subspace x;
  Subspace y;
};

struct InvGroup {
  FiniteGroup group;
  std::shared_ptr<const std::map<Key, InvElem>> elements;
  std::vector<Subspace> unital;  // all unital R-sub-bimodules of S

  const InvElem& at(const Key& k) const;
};

/// Enumerates Inv(R ⊆ S). Throws Error{Internal} if some X has two partners.
InvGroup invertible_subbimodules(const ExtensionModules& v);

/// X as an (R, R)-bimodule in the coordinates of its RREF basis.
Bimodule subbimodule_module(const ExtensionModules& v, const Subspace& x);

/// [X] = [R]: X ≅ R as R-bimodules.
bool is_trivial_class(const ExtensionModules& v, const Subspace& x);

}  // namespace picseq::extgroups
