#include "picseq/extgroups/workbench.hpp"

#include "picseq/error.hpp"

namespace picseq::extgroups {

namespace {
constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
}

std::size_t ObjectClasses::index(const Key& k) const {
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == k) return i;
  }
  throw Error(ErrorKind::Internal, "unknown object class " + k);
}

Workbench::Workbench(const algebra::RingExtension& ext, WorkbenchOptions opts)
    : views_(std::make_shared<const ExtensionModules>(bimodule::make_extension_modules(ext))), opts_(opts) {}

const InvGroup& Workbench::inv() {
  if (!inv_) inv_ = invertible_subbimodules(*views_);
  return *inv_;
}

const MapGroup& Workbench::aut_sr() {
  if (!aut_sr_) aut_sr_ = bilinear_automorphisms(*views_);
  return *aut_sr_;
}

const MapGroup& Workbench::aut_rrings() {
  if (!aut_rrings_) aut_rrings_ = ring_automorphisms_over_base(*views_);
  return *aut_rrings_;
}

const BaseKernelReport& Workbench::base_kernel() {
  if (!base_kernel_) base_kernel_ = base_kernel_report(*views_, aut_sr(), inv());
  return *base_kernel_;
}

const InducedKernelReport& Workbench::induced_kernel() {
  if (!induced_kernel_) induced_kernel_ = induced_kernel_report(*views_, aut_sr(), aut_rrings());
  return *induced_kernel_;
}

groupkit::GroupHom Workbench::base_preimage_hom() {
  auto v = views_;
  MapGroup g = aut_sr();
  return {"D", g.group, inv().group,
          [v, g](const Key& k) { return base_preimage(*v, g.at(k)).x.key(); }};
}

groupkit::GroupHom Workbench::induced_hom() {
  auto v = views_;
  MapGroup g = aut_sr();
  return {"hat", g.group, aut_rrings().group,
          [v, g](const Key& k) { return induced_automorphism(*v, g.at(k)).key(); }};
}

groupkit::GroupHom Workbench::inclusion_object_hom() {
  const ObjectClasses& c = classes();
  auto table = std::make_shared<std::map<Key, Key>>(c.from_inv);
  return {"D'", inv().group, c.group, [table](const Key& k) { return table->at(k); }};
}

groupkit::GroupHom Workbench::twisted_unit_hom() {
  const ObjectClasses& c = classes();
  auto table = std::make_shared<std::map<Key, Key>>(c.from_automorphism);
  return {"E", aut_rrings().group, c.group, [table](const Key& k) { return table->at(k); }};
}

std::optional<std::size_t> Workbench::intern(ObjectClasses& c, std::vector<std::string>& certs, const MsrObject& o) {
  bool rt = right_component_witness(*views_, o).has_value();
  bool lt = left_component_witness(*views_, o).has_value();
  std::string cert = "P" + std::to_string(o.P.dim) + "X" + std::to_string(o.X.dim) + "/" + (rt ? "1" : "0") +
                     (lt ? "1" : "0");
  int same_cert = 0;
  for (std::size_t i = 0; i < c.reps.size(); ++i) {
    if (certs[i] != cert) continue;
    ++same_cert;
    if (object_class_iso(o, c.reps[i])) return i;
  }
  if (c.reps.size() >= c.cap) {
    c.cap_hit = true;
    return std::nullopt;
  }
  c.keys.push_back(cert + "#" + std::to_string(same_cert));
  certs.push_back(cert);
  c.reps.push_back(o);
  c.right_trivial.push_back(rt);
  c.left_trivial.push_back(lt);
  c.inverse_of.push_back(kUnset);
  c.inverse_square_commutes.push_back(false);
  for (auto& row : c.table) row.push_back(kUnset);
  c.table.emplace_back(c.reps.size(), kUnset);
  return c.reps.size() - 1;
}

std::optional<Key> Workbench::find_class(const MsrObject& o) {
  const ObjectClasses& c = classes();
  for (std::size_t i = 0; i < c.reps.size(); ++i) {
    if (c.reps[i].P.dim == o.P.dim && c.reps[i].X.dim == o.X.dim && object_class_iso(o, c.reps[i])) {
      return c.keys[i];
    }
  }
  return std::nullopt;
}

const ObjectClasses& Workbench::classes() {
  if (classes_) return *classes_;
  const ExtensionModules& v = *views_;
  ObjectClasses c;
  c.cap = opts_.class_cap;
  std::vector<std::string> certs;
  intern(c, certs, neutral_object(v));
  for (const Key& k : inv().group.elements()) {
    auto idx = intern(c, certs, inclusion_object(v, inv().at(k)));
    if (idx) c.from_inv[k] = c.keys[*idx];
  }
  for (const Key& k : aut_rrings().group.elements()) {
    auto idx = intern(c, certs, twisted_unit_object(v, aut_rrings().at(k)));
    if (idx) c.from_automorphism[k] = c.keys[*idx];
  }
  bool changed = true;
  while (changed && !c.cap_hit) {
    changed = false;
    for (std::size_t i = 0; i < c.reps.size() && !c.cap_hit; ++i) {
      if (c.inverse_of[i] == kUnset) {
        InverseResult inv_res = object_inverse(v, c.reps[i]);
        c.inverse_square_commutes[i] = inv_res.square_commutes;
        std::size_t before = c.reps.size();
        auto idx = intern(c, certs, inv_res.object);
        if (idx) c.inverse_of[i] = *idx;
        changed = changed || c.reps.size() != before;
      }
      for (std::size_t j = 0; j < c.reps.size() && !c.cap_hit; ++j) {
        if (c.table[i][j] != kUnset) continue;
        std::size_t before = c.reps.size();
        auto idx = intern(c, certs, object_product(v, c.reps[i], c.reps[j]));
        if (idx) c.table[i][j] = *idx;
        changed = changed || c.reps.size() != before;
      }
    }
  }
  auto keys = std::make_shared<std::vector<Key>>(c.keys);
  auto table = std::make_shared<std::vector<std::vector<std::size_t>>>(c.table);
  groupkit::MulFn mul = [keys, table](const Key& a, const Key& b) -> Key {
    std::size_t i = 0, j = 0;
    for (; i < keys->size() && (*keys)[i] != a; ++i) {}
    for (; j < keys->size() && (*keys)[j] != b; ++j) {}
    if (i == keys->size() || j == keys->size() || (*table)[i][j] == kUnset) {
      throw Error(ErrorKind::SearchTooLarge, "product of classes " + a + " and " + b + " was not computed");
    }
    return (*keys)[(*table)[i][j]];
  };
  c.group = FiniteGroup("P(S/R)", c.keys, std::move(mul), c.keys.front());
  classes_ = std::move(c);
  return *classes_;
}

}  // namespace picseq::extgroups
