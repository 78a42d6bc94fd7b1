#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "picseq/extgroups/automorphisms.hpp"
#include "picseq/extgroups/objects.hpp"
#include "picseq/extgroups/reductions.hpp"

namespace picseq::extgroups {

/// Isomorphism classes of objects reached from the neutral object, the
/// images of Inv and of the ring automorphisms, closed under products and
/// inverses. Class keys read "P<dim>X<dim>/<r><l>#<n>" where r (l) is 1
/// when [X] = [S] ([P] = [R]).
struct ObjectClasses {
  FiniteGroup group;
  std::vector<Key> keys;
  std::vector<MsrObject> reps;
  std::vector<bool> right_trivial;
  std::vector<bool> left_trivial;
  std::vector<std::vector<std::size_t>> table;  // index of reps[i] * reps[j]
  std::vector<std::size_t> inverse_of;
  std::vector<bool> inverse_square_commutes;
  std::map<Key, Key> from_inv;        // Inv key -> class key
  std::map<Key, Key> from_automorphism;  // ring automorphism key -> class key
  bool cap_hit = false;
  std::size_t cap = 0;

  std::size_t index(const Key& k) const;
};

struct WorkbenchOptions {
  std::size_t class_cap = 64;
};

/// Lazily computed groups and maps of one extension.
class Workbench {
 public:
  explicit Workbench(const algebra::RingExtension& ext, WorkbenchOptions opts = {});

  const ExtensionModules& modules() const noexcept { return *views_; }
  const InvGroup& inv();
  const MapGroup& aut_sr();
  const MapGroup& aut_rrings();
  const BaseKernelReport& base_kernel();
  const InducedKernelReport& induced_kernel();
  const ObjectClasses& classes();

  /// Aut_SR(S) -> Inv, λ ↦ λ^{-1}(R).
  groupkit::GroupHom base_preimage_hom();
  /// Aut_SR(S) -> Aut_R-rings(S).
  groupkit::GroupHom induced_hom();
  /// Inv -> classes.
  groupkit::GroupHom inclusion_object_hom();
  /// Aut_R-rings(S) -> classes.
  groupkit::GroupHom twisted_unit_hom();

  /// Class of an arbitrary object among the generated classes, if present.
  std::optional<Key> find_class(const MsrObject& o);

 private:
  std::optional<std::size_t> intern(ObjectClasses& c, std::vector<std::string>& certs, const MsrObject& o);

  std::shared_ptr<const ExtensionModules> views_;
  WorkbenchOptions opts_;
  std::optional<InvGroup> inv_;
  std::optional<MapGroup> aut_sr_;
  std::optional<MapGroup> aut_rrings_;
  std::optional<BaseKernelReport> base_kernel_;
  std::optional<InducedKernelReport> induced_kernel_;
  std::optional<ObjectClasses> classes_;
};

}  // namespace picseq::extgroups
