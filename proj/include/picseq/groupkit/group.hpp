#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace picseq::groupkit {

/// Canonical element key; equal keys mean equal elements.
using Key = std::string;
using MulFn = std::function<Key(const Key&, const Key&)>;

/// An explicit finite group: an element list, a multiplication on keys and
/// the neutral key.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, std::vector<Key> elements, MulFn mul, Key neutral);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Key>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Key& neutral() const noexcept { return neutral_; }
  bool contains(const Key& k) const { return index_->count(k) != 0; }

  Key mul(const Key& a, const Key& b) const { return mul_(a, b); }
  /// Inverse by search; throws Error{Validation} if there is none.
  Key inverse(const Key& a) const;

  /// A subset with the inherited multiplication (not validated here).
  FiniteGroup subgroup(std::string name, std::vector<Key> keys) const;
  const MulFn& mul_fn() const noexcept { return mul_; }

 private:
  std::string name_;
  std::vector<Key> elements_;
  MulFn mul_;
  Key neutral_;
  std::shared_ptr<std::unordered_map<Key, std::size_t>> index_ = std::make_shared<std::unordered_map<Key, std::size_t>>();
};

struct GroupReport {
  bool ok = true;
  std::vector<std::string> problems;
};

inline constexpr std::size_t kExhaustiveAssociativityLimit = 256;
inline constexpr int kSampledTriples = 1000;

/// Closure, neutral law, inverses, associativity (exhaustive up to 256
/// elements, 1000 seeded random triples above).
GroupReport validate_group(const FiniteGroup& g);

FiniteGroup trivial_group(std::string name);

struct GroupHom {
  std::string name;
  FiniteGroup dom;
  FiniteGroup cod;
  std::function<Key(const Key&)> map;

  Key operator()(const Key& k) const { return map(k); }
};

/// Neutral goes to neutral, images lie in cod, and map(ab) = map(a)map(b).
GroupReport validate_hom(const GroupHom& h);

GroupHom inclusion(const FiniteGroup& sub, const FiniteGroup& g, std::string name = "incl");
GroupHom trivial_hom(const FiniteGroup& dom, const FiniteGroup& cod, std::string name = "1");

FiniteGroup kernel(const GroupHom& h);
FiniteGroup image(const GroupHom& h);
FiniteGroup center(const FiniteGroup& g);

struct ExactnessReport {
  bool exact = true;
  std::vector<Key> image_not_in_kernel;
  std::vector<Key> kernel_not_in_image;
  /// image(f) ⊆ kernel(g), the weak half.
  bool weakly_exact = true;
};

/// Verdict image(f) = kernel(g). Throws Error{DimensionMismatch} when
/// cod(f) and dom(g) differ.
ExactnessReport exact_at(const GroupHom& f, const GroupHom& g);

/// Same with the outgoing map replaced by a triviality predicate on dom:
/// the kernel is {x : trivial(x)}.
ExactnessReport exact_at(const GroupHom& f, const std::function<bool(const Key&)>& trivial);

/// Every element of h commutes with every element of g. Throws
/// Error{Validation} when h is not a subset of g.
bool is_subgroup_of_center(const FiniteGroup& h, const FiniteGroup& g);

}  // namespace picseq::groupkit
