#include "picseq/extgroups/subbimodules.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "picseq/bimodule/hom.hpp"
#include "picseq/bimodule/picard.hpp"
#include "picseq/error.hpp"

namespace picseq::extgroups {

std::vector<Subspace> all_sub_bimodules(const Bimodule& m, std::uint64_t limit) {
  std::vector<Vec> vectors = exactla::elements(Subspace::whole(m.dim, m.p()), limit);
  std::map<Key, Subspace> found;
  std::deque<Subspace> queue;
  Subspace zero(m.dim, m.p());
  found.emplace(zero.key(), zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Subspace x = queue.front();
    queue.pop_front();
    for (const Vec& v : vectors) {
      if (x.contains(v)) continue;
      std::vector<Vec> gens = x.basis_vectors();
      gens.push_back(v);
      Subspace next = bimodule::closure(m, gens);
      if (found.emplace(next.key(), next).second) queue.push_back(next);
    }
  }
  std::vector<Subspace> out;
  for (auto& [k, s] : found) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  return out;
}

const InvElem& InvGroup::at(const Key& k) const {
  auto it = elements->find(k);
  if (it == elements->end()) throw Error(ErrorKind::Internal, "unknown element of Inv: " + k);
  return it->second;
}

Bimodule subbimodule_module(const ExtensionModules& v, const Subspace& x) {
  return bimodule::sub_bimodule(v.s_rr, x);
}

bool is_trivial_class(const ExtensionModules& v, const Subspace& x) {
  return bimodule::iso_search(subbimodule_module(v, x), v.r_reg, bimodule::Linearity::Bilinear).has_value();
}

InvGroup invertible_subbimodules(const ExtensionModules& v) {
  const auto& S = *v.ext.S;
  InvGroup g;
  for (const Subspace& x : all_sub_bimodules(v.s_rr)) {
    if (bimodule::check_unital(subbimodule_module(v, x))) g.unital.push_back(x);
  }
  auto elems = std::make_shared<std::map<Key, InvElem>>();
  std::vector<Key> keys;
  for (const Subspace& x : g.unital) {
    std::vector<const Subspace*> partners;
    for (const Subspace& y : g.unital) {
      if (bimodule::product_span(S, x, y) == v.ext.r_space && bimodule::product_span(S, y, x) == v.ext.r_space) {
        partners.push_back(&y);
      }
    }
    if (partners.size() > 1) throw Error(ErrorKind::Internal, "sub-bimodule " + x.key() + " has several inverses");
    if (partners.size() == 1) {
      keys.push_back(x.key());
      elems->emplace(x.key(), InvElem{x, *partners.front()});
    }
  }
  // R first, then the rest in enumeration order
  Key neutral = v.ext.r_space.key();
  std::stable_partition(keys.begin(), keys.end(), [&](const Key& k) { return k == neutral; });
  auto s_ptr = v.ext.S;
  auto lookup = elems;
  groupkit::MulFn mul = [s_ptr, lookup](const Key& a, const Key& b) {
    return bimodule::product_span(*s_ptr, lookup->at(a).x, lookup->at(b).x).key();
  };
  g.group = FiniteGroup("Inv", std::move(keys), std::move(mul), neutral);
  g.elements = elems;
  return g;
}

}  // namespace picseq::extgroups
