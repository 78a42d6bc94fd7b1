#include "picseq/groupkit/group.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "picseq/error.hpp"

namespace picseq::groupkit {

FiniteGroup::FiniteGroup(std::string name, std::vector<Key> elements, MulFn mul, Key neutral)
    : name_(std::move(name)), elements_(std::move(elements)), mul_(std::move(mul)), neutral_(std::move(neutral)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_->emplace(elements_[i], i).second) {
      throw Error(ErrorKind::Validation, "group " + name_ + " lists element " + elements_[i] + " twice");
    }
  }
}

Key FiniteGroup::inverse(const Key& a) const {
  for (const Key& b : elements_) {
    if (mul(a, b) == neutral_ && mul(b, a) == neutral_) return b;
  }
  throw Error(ErrorKind::Validation, "element " + a + " of " + name_ + " has no inverse");
}

FiniteGroup FiniteGroup::subgroup(std::string name, std::vector<Key> keys) const {
  return FiniteGroup(std::move(name), std::move(keys), mul_, neutral_);
}

GroupReport validate_group(const FiniteGroup& g) {
  GroupReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.problems.size() < 20) rep.problems.push_back(std::move(msg));
  };
  const auto& els = g.elements();
  if (!g.contains(g.neutral())) fail("neutral element " + g.neutral() + " is not listed");
  for (const Key& a : els) {
    if (g.mul(a, g.neutral()) != a || g.mul(g.neutral(), a) != a) fail("neutral law fails for " + a);
    for (const Key& b : els) {
      if (!g.contains(g.mul(a, b))) fail("product " + a + " * " + b + " leaves the group");
    }
    bool has_inverse = std::any_of(els.begin(), els.end(), [&](const Key& b) {
      return g.mul(a, b) == g.neutral() && g.mul(b, a) == g.neutral();
    });
    if (!has_inverse) fail("no inverse for " + a);
  }
  if (!rep.ok) return rep;
  auto check = [&](const Key& a, const Key& b, const Key& c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) fail("associativity fails on (" + a + ", " + b + ", " + c + ")");
  };
  if (els.size() <= kExhaustiveAssociativityLimit) {
    for (const Key& a : els)
      for (const Key& b : els)
        for (const Key& c : els) check(a, b, c);
  } else {
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int t = 0; t < kSampledTriples; ++t) check(els[pick(rng)], els[pick(rng)], els[pick(rng)]);
  }
  return rep;
}

FiniteGroup trivial_group(std::string name) {
  return FiniteGroup(std::move(name), {"1"}, [](const Key&, const Key&) { return Key("1"); }, "1");
}

GroupReport validate_hom(const GroupHom& h) {
  GroupReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.problems.size() < 20) rep.problems.push_back(std::move(msg));
  };
  if (h(h.dom.neutral()) != h.cod.neutral()) fail(h.name + " does not preserve the neutral element");
  for (const Key& a : h.dom.elements()) {
    if (!h.cod.contains(h(a))) fail(h.name + "(" + a + ") is not in " + h.cod.name());
  }
  if (!rep.ok) return rep;
  for (const Key& a : h.dom.elements()) {
    for (const Key& b : h.dom.elements()) {
      if (h(h.dom.mul(a, b)) != h.cod.mul(h(a), h(b))) fail(h.name + " is not multiplicative on (" + a + ", " + b + ")");
    }
  }
  return rep;
}

GroupHom inclusion(const FiniteGroup& sub, const FiniteGroup& g, std::string name) {
  return GroupHom{std::move(name), sub, g, [](const Key& k) { return k; }};
}

GroupHom trivial_hom(const FiniteGroup& dom, const FiniteGroup& cod, std::string name) {
  Key n = cod.neutral();
  return GroupHom{std::move(name), dom, cod, [n](const Key&) { return n; }};
}

FiniteGroup kernel(const GroupHom& h) {
  std::vector<Key> keys;
  for (const Key& a : h.dom.elements()) {
    if (h(a) == h.cod.neutral()) keys.push_back(a);
  }
  return h.dom.subgroup("Ker(" + h.name + ")", std::move(keys));
}

FiniteGroup image(const GroupHom& h) {
  std::vector<Key> keys;
  std::set<Key> seen;
  for (const Key& a : h.dom.elements()) {
    Key b = h(a);
    if (seen.insert(b).second) keys.push_back(b);
  }
  return h.cod.subgroup("Im(" + h.name + ")", std::move(keys));
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<Key> keys;
  for (const Key& a : g.elements()) {
    bool central = std::all_of(g.elements().begin(), g.elements().end(),
                               [&](const Key& b) { return g.mul(a, b) == g.mul(b, a); });
    if (central) keys.push_back(a);
  }
  return g.subgroup("Z(" + g.name() + ")", std::move(keys));
}

namespace {

ExactnessReport compare(const std::vector<Key>& img, const std::vector<Key>& ker) {
  ExactnessReport rep;
  std::set<Key> i(img.begin(), img.end());
  std::set<Key> k(ker.begin(), ker.end());
  std::set_difference(i.begin(), i.end(), k.begin(), k.end(), std::back_inserter(rep.image_not_in_kernel));
  std::set_difference(k.begin(), k.end(), i.begin(), i.end(), std::back_inserter(rep.kernel_not_in_image));
  rep.weakly_exact = rep.image_not_in_kernel.empty();
  rep.exact = rep.weakly_exact && rep.kernel_not_in_image.empty();
  return rep;
}

}  // namespace

ExactnessReport exact_at(const GroupHom& f, const GroupHom& g) {
  if (f.cod.elements() != g.dom.elements()) {
    throw Error(ErrorKind::DimensionMismatch, "exact_at: " + f.name + " and " + g.name + " are not composable");
  }
  return compare(image(f).elements(), kernel(g).elements());
}

ExactnessReport exact_at(const GroupHom& f, const std::function<bool(const Key&)>& trivial) {
  std::vector<Key> ker;
  for (const Key& a : f.cod.elements()) {
    if (trivial(a)) ker.push_back(a);
  }
  return compare(image(f).elements(), ker);
}

bool is_subgroup_of_center(const FiniteGroup& h, const FiniteGroup& g) {
  for (const Key& a : h.elements()) {
    if (!g.contains(a)) throw Error(ErrorKind::Validation, "element " + a + " of " + h.name() + " is not in " + g.name());
  }
  for (const Key& a : h.elements()) {
    for (const Key& b : g.elements()) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

}  // namespace picseq::groupkit
