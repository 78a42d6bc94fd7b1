// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from the brute-force oracle.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "picseq/bimodule/hom.hpp"
#include "picseq/bimodule/picard.hpp"
#include "picseq/bimodule/tensor.hpp"
#include "picseq/cli/run.hpp"
#include "picseq/error.hpp"
#include "picseq/exactla/kernels.hpp"
#include "picseq/extgroups/workbench.hpp"
#include "support.hpp"

using namespace picseq;
using namespace picseq::extgroups;
using bimodule::Linearity;
using bimodule::PicardPair;
using bimodule::TensorProduct;

namespace {

// Collects failures; an empty list means the criterion holds.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Loaded {
  std::string name;
  cli::Fixture fixture;
  oracle::Ring ring;
  std::unique_ptr<Workbench> wb;
};

Loaded load(const std::string& name) {
  Loaded l{name, testsupport::load_fixture(name), {}, nullptr};
  l.ring = oracle::Ring::from_fixture(l.fixture);
  l.wb = std::make_unique<Workbench>(cli::build_extension(l.fixture));
  return l;
}

std::set<oracle::Matrix> maps_of(const MapGroup& g, const FiniteGroup& sub) {
  std::set<oracle::Matrix> out;
  for (const Key& k : sub.elements()) out.insert(oracle::to_matrix(g.at(k)));
  return out;
}

oracle::Vector to_vector(const Vec& v) { return oracle::Vector(v.begin(), v.end()); }

bool same_class(const MsrObject& a, const MsrObject& b) { return object_class_iso(a, b).has_value(); }

std::vector<Mat> all_maps(const bimodule::Bimodule& m, const bimodule::Bimodule& n) {
  std::vector<Mat> out;
  Subspace space = bimodule::hom_space(m, n, Linearity::Bilinear);
  for (const Vec& f : exactla::elements(space, 1u << 12)) out.push_back(bimodule::unflatten(f, n.dim, m.dim, m.p()));
  return out;
}

// 1: every sequence run passes through the command-line entry point.
Outcome exactness() {
  Outcome o;
  double worst = 0;
  for (const char* name : testsupport::kAllFixtures) {
    std::string path = testsupport::fixture_path(name);
    const char* argv[] = {"picseq", "verify-seq", "--n", "all", path.c_str()};
    std::ostringstream out, err;
    auto t0 = std::chrono::steady_clock::now();
    int code = cli::run_cli(5, argv, out, err);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    o.expect(code == cli::kExitOk, std::string(name) + ": exit " + std::to_string(code) + " " + err.str());
    std::istringstream lines(out.str());
    int passes = 0;
    for (std::string line; std::getline(lines, line);) passes += line.rfind("PASS seq", 0) == 0;
    o.expect(passes == 4, std::string(name) + ": " + std::to_string(passes) + " passing sequences");
    o.expect(secs < 30.0, std::string(name) + ": took " + std::to_string(secs) + " s");
  }
  o.summary = "16 runs, slowest fixture " + std::to_string(worst).substr(0, 5) + " s";
  return o;
}

// 2
Outcome inv_enumeration(std::vector<Loaded>& fx) {
  Outcome o;
  for (Loaded& l : fx) {
    std::vector<oracle::Set> lib;
    const InvGroup& inv = l.wb->inv();
    for (const Key& k : inv.group.elements()) lib.push_back(oracle::to_set(l.ring, inv.at(k).x));
    o.expect(oracle::as_set(lib) == oracle::as_set(oracle::invertible_pairs(l.ring)), l.name + ": Inv differs from oracle");
  }
  const InvGroup& a = fx[0].wb->inv();
  Subspace x = Subspace::span({{0, 1, 0, 0}, {0, 0, 1, 0}}, 4, 2);
  o.expect(a.group.order() == 2, "|Inv(fix-a)| != 2");
  o.expect(a.group.contains(x.key()), "span{E12, E21} missing from Inv(fix-a)");
  o.expect(fx[2].wb->inv().group.order() == 1, "Inv(fix-c) not trivial");
  o.expect(fx[3].wb->inv().group.order() == 1, "Inv(fix-d) not trivial");
  o.summary = "orders 2/" + std::to_string(fx[1].wb->inv().group.order()) + "/1/1 match the subspace-pair oracle";
  return o;
}

// 3
Outcome group_orders(std::vector<Loaded>& fx) {
  Outcome o;
  for (Loaded& l : fx) {
    auto aut = oracle::bilinear_automorphisms(l.ring);
    o.expect(maps_of(l.wb->aut_sr(), l.wb->aut_sr().group) == oracle::as_set(aut), l.name + ": aut_sr");
    o.expect(maps_of(l.wb->aut_rrings(), l.wb->aut_rrings().group) == oracle::as_set(oracle::ring_automorphisms(l.ring)),
             l.name + ": aut_rrings");
    o.expect(maps_of(l.wb->aut_sr(), l.wb->induced_kernel().kernel) == oracle::as_set(oracle::induced_kernel(l.ring, aut)),
             l.name + ": Ker hat");
  }
  Workbench& b = *fx[1].wb;
  o.expect(b.aut_sr().group.order() == 4, "|aut_sr(fix-b)| != 4");
  o.expect(b.aut_rrings().group.order() == 2, "|aut_rrings(fix-b)| != 2");
  o.expect(b.induced_kernel().kernel.order() == 2, "|Ker hat(fix-b)| != 2");
  o.summary = "fix-b: 4, 2, 2; all fixtures equal the oracle";
  return o;
}

// 4
Outcome kernel_descriptions(std::vector<Loaded>& fx) {
  Outcome o;
  for (Loaded& l : fx) {
    auto aut = oracle::bilinear_automorphisms(l.ring);
    const FiniteGroup& kd = l.wb->base_kernel().kernel;
    const FiniteGroup& kh = l.wb->induced_kernel().kernel;
    o.expect(groupkit::is_subgroup_of_center(kd, l.wb->aut_sr().group), l.name + ": Ker D not central");
    o.expect(maps_of(l.wb->aut_sr(), kd) == oracle::as_set(oracle::base_kernel(l.ring, aut)), l.name + ": Ker D vs oracle");
    o.expect(maps_of(l.wb->aut_sr(), kd) == oracle::as_set(oracle::corner_description(l.ring, aut, true)),
             l.name + ": Ker D vs corners of R");
    o.expect(maps_of(l.wb->aut_sr(), kh) == oracle::as_set(oracle::corner_description(l.ring, aut, false)),
             l.name + ": Ker hat vs corners of S");
    o.expect(maps_of(l.wb->aut_sr(), kh) == oracle::as_set(oracle::right_s_linear(l.ring, aut)),
             l.name + ": Ker hat vs S-bilinear maps");
  }
  o.summary = "set equality on four fixtures";
  return o;
}

// 5
Outcome unit_identity(std::vector<Loaded>& fx) {
  Outcome o;
  std::size_t n = 0;
  for (Loaded& l : fx) {
    const MapGroup& g = l.wb->aut_sr();
    for (const Key& k : g.group.elements()) {
      const Mat& lam = g.at(k);
      Mat inv = exactla::inverse(lam);
      for (const Vec& e : l.wb->modules().ext.S->local_units()) {
        oracle::Vector a = to_vector(lam * e), b = to_vector(inv * e), ev = to_vector(e);
        o.expect(l.ring.mul(a, b) == ev && l.ring.mul(b, a) == ev, l.name + ": fails at " + k);
        ++n;
      }
    }
  }
  o.summary = std::to_string(n) + " (λ, e) pairs";
  return o;
}

// 6
Outcome multiplication_maps(std::vector<Loaded>& fx) {
  Outcome o;
  std::size_t n = 0;
  for (Loaded& l : fx) {
    const InvGroup& inv = l.wb->inv();
    for (const Key& k : inv.group.elements()) {
      const InvElem& e = inv.at(k);
      bimodule::MultiplicationIsos m = bimodule::multiplication_isos(l.wb->modules(), e.x, e.y);
      o.expect(m.left_invertible && m.right_invertible && m.unit_invertible, l.name + ": " + k + " not invertible");
      o.expect(m.inverse_matches, l.name + ": " + k + " inverse mismatch");
      o.expect(m.unit_choice_independent, l.name + ": " + k + " depends on the unit");
      ++n;
    }
  }
  o.summary = std::to_string(n) + " elements of Inv";
  return o;
}

// 7
Outcome induced_maps(std::vector<Loaded>& fx) {
  Outcome o;
  std::size_t total = 0, isos = 0;
  auto examine = [&](const std::string& tag, const ExtensionModules& v, const bimodule::Bimodule& p,
                     const bimodule::Bimodule& x, const PicardPair& pp, const PicardPair& px) {
    for (const Mat& phi : all_maps(p, v.as_rr(x))) {
      InducedMapsReport r = induced_maps_report(v, p, x, phi, pp, px);
      o.expect(r.preconditions_met, tag + ": preconditions");
      o.expect(r.right_iso == r.left_iso, tag + ": one-sided induced iso");
      if (r.right_iso || r.left_iso) o.expect(r.injective, tag + ": φ not injective");
      // the right map is onto iff φ(P)S spans X
      std::vector<Vec> image;
      for (int i = 0; i < phi.cols(); ++i)
        for (const Mat& act : x.right_act) image.push_back(act * phi.col(i));
      bool onto = Subspace::span(image, x.dim, x.p()).dim() == x.dim;
      if (r.right_iso) o.expect(onto, tag + ": iso without surjectivity");
      bool built = true;
      try {
        make_object(v, p, x, phi, pp, px);
      } catch (const Error&) {
        built = false;
      }
      o.expect(built == r.right_iso, tag + ": make_object disagrees");
      ++total;
      isos += r.right_iso;
    }
  };
  for (Loaded& l : fx) {
    const ExtensionModules& v = l.wb->modules();
    PicardPair r_unit = bimodule::trivial_pair(v.ext.R);
    PicardPair s_unit = bimodule::trivial_pair(v.ext.S);
    examine(l.name + "/R", v, v.r_reg, v.s_reg, r_unit, s_unit);
    const InvGroup& inv = l.wb->inv();
    for (const Key& k : inv.group.elements()) {
      examine(l.name + "/X", v, subbimodule_module(v, inv.at(k).x), v.s_reg, subbimodule_pair(v, inv.at(k)), s_unit);
    }
    const MapGroup& rings = l.wb->aut_rrings();
    for (const Key& k : rings.group.elements()) {
      examine(l.name + "/twist", v, v.r_reg, twisted_regular(v, rings.at(k)), r_unit, twisted_pair(v, rings.at(k)));
    }
  }
  o.expect(total >= 20, "only " + std::to_string(total) + " objects");
  o.summary = std::to_string(total) + " candidates, " + std::to_string(isos) + " with bijective induced maps";
  return o;
}

// 8
Outcome inverses(std::vector<Loaded>& fx) {
  Outcome o;
  std::size_t n = 0;
  for (std::size_t i : {0u, 1u}) {
    Loaded& l = fx[i];
    const ExtensionModules& v = l.wb->modules();
    const ObjectClasses& c = l.wb->classes();
    o.expect(!c.cap_hit, l.name + ": class cap reached");
    MsrObject unit = neutral_object(v);
    for (std::size_t k = 0; k < c.reps.size(); ++k) {
      InverseResult inv = object_inverse(v, c.reps[k]);
      o.expect(inv.square_commutes, l.name + ": square fails for " + c.keys[k]);
      o.expect(same_class(object_product(v, c.reps[k], inv.object), unit), l.name + ": right inverse " + c.keys[k]);
      o.expect(same_class(object_product(v, inv.object, c.reps[k]), unit), l.name + ": left inverse " + c.keys[k]);
      ++n;
    }
  }
  o.summary = std::to_string(n) + " classes on fix-a and fix-b";
  return o;
}

// 9
Outcome reductions(std::vector<Loaded>& fx) {
  Outcome o;
  std::size_t twists = 0, right = 0, left = 0;
  for (Loaded& l : fx) {
    const ExtensionModules& v = l.wb->modules();
    const MapGroup& rings = l.wb->aut_rrings();
    for (const Key& k : rings.group.elements()) {
      const Mat& phi = rings.at(k);
      auto omega = twist_trivial_witness(v, phi);
      if (!omega) continue;
      Mat lam = automorphism_from_twist_iso(v, phi, *omega);
      o.expect(l.wb->aut_sr().group.contains(lam.key()), l.name + ": λ not in aut_sr");
      o.expect(induced_automorphism(v, lam) == phi, l.name + ": hat(λ) != φ");
      ++twists;
    }
    const ObjectClasses& c = l.wb->classes();
    for (std::size_t i = 0; i < c.reps.size(); ++i) {
      const MsrObject& a = c.reps[i];
      if (auto beta = right_component_witness(v, a)) {
        InvElem x = subbimodule_from_trivial_codomain(v, l.wb->inv(), a, *beta);
        o.expect(same_class(inclusion_object(v, x), a), l.name + ": D' round trip " + c.keys[i]);
        ++right;
      }
      if (auto f = left_component_witness(v, a)) {
        TrivialDomainReduction red = automorphism_from_trivial_domain(v, a, *f);
        o.expect(rings.group.contains(red.gamma.key()), l.name + ": γ not a ring automorphism");
        o.expect(same_class(twisted_unit_object(v, red.gamma), a), l.name + ": E round trip " + c.keys[i]);
        ++left;
      }
    }
  }
  o.summary = std::to_string(twists) + " twist witnesses, " + std::to_string(right) + " + " + std::to_string(left) +
              " kernel classes";
  return o;
}

// 10: randomized substrate identities.
struct Pool {
  const ExtensionModules* v;
  std::vector<bimodule::Bimodule> over_r;
  std::vector<bimodule::Bimodule> over_s;
  std::vector<PicardPair> pairs_r;
  std::vector<PicardPair> pairs_s;
};

Vec random_vec(std::mt19937& rng, int n, int p) {
  Vec v(static_cast<std::size_t>(n));
  for (auto& x : v) x = static_cast<exactla::Residue>(rng() % static_cast<unsigned>(p));
  return v;
}

Mat random_hom(std::mt19937& rng, const bimodule::Bimodule& m, const bimodule::Bimodule& n) {
  Subspace space = bimodule::hom_space(m, n, Linearity::Bilinear);
  return bimodule::unflatten(space.from_coordinates(random_vec(rng, space.dim(), m.p())), n.dim, m.dim, m.p());
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& xs) {
  return xs[rng() % xs.size()];
}

Outcome substrate(std::vector<Loaded>& fx) {
  Outcome o;
  std::vector<Pool> pools;
  for (Loaded& l : fx) {
    const ExtensionModules& v = l.wb->modules();
    Pool pool{&v, {v.r_reg, v.s_rr}, {v.s_reg}, {bimodule::trivial_pair(v.ext.R)}, {bimodule::trivial_pair(v.ext.S)}};
    for (const Key& k : l.wb->inv().group.elements()) {
      pool.over_r.push_back(subbimodule_module(v, l.wb->inv().at(k).x));
      pool.pairs_r.push_back(subbimodule_pair(v, l.wb->inv().at(k)));
    }
    for (const Key& k : l.wb->aut_rrings().group.elements()) {
      pool.over_s.push_back(twisted_regular(v, l.wb->aut_rrings().at(k)));
      pool.pairs_s.push_back(twisted_pair(v, l.wb->aut_rrings().at(k)));
    }
    pools.push_back(std::move(pool));
  }

  std::mt19937 rng(20240917u);
  const int kCases = 160;
  int counts[4] = {0, 0, 0, 0};
  for (int t = 0; t < kCases; ++t) {
    const Pool& pool = pools[static_cast<std::size_t>(t) % pools.size()];
    bool use_s = rng() % 2;
    const auto& mods = use_s ? pool.over_s : pool.over_r;
    const bimodule::Bimodule& reg = use_s ? pool.v->s_reg : pool.v->r_reg;
    std::string tag = "case " + std::to_string(t);
    int kind = t % 4;
    ++counts[kind];
    try {
      if (kind == 0) {
        // unit isomorphisms A ⊗ M -> M and M ⊗ A -> M
        const auto& m = pick(rng, mods);
        TensorProduct left = bimodule::tensor_over(reg, m);
        TensorProduct right = bimodule::tensor_over(m, reg);
        Mat lm = bimodule::left_action_map(left, m);
        Mat rm = bimodule::right_action_map(right, m);
        o.expect(exactla::is_invertible(lm) && exactla::is_invertible(rm), tag + ": unit map not bijective");
        o.expect(bimodule::is_linear(left.module, m, lm, Linearity::Bilinear) &&
                     bimodule::is_linear(right.module, m, rm, Linearity::Bilinear),
                 tag + ": unit map not bilinear");
      } else if (kind == 1) {
        // (M ⊗ N) ⊗ K -> M ⊗ (N ⊗ K) on pure tensors
        const auto& m = pick(rng, mods);
        const auto& n = pick(rng, mods);
        const auto& k = pick(rng, mods);
        TensorProduct mn = bimodule::tensor_over(m, n);
        TensorProduct nk = bimodule::tensor_over(n, k);
        TensorProduct mn_k = bimodule::tensor_over(mn.module, k);
        TensorProduct m_nk = bimodule::tensor_over(m, nk.module);
        Mat assoc = bimodule::descend_from_basis(mn_k, m_nk.module.dim, [&](int a, int c) {
          auto [i, j] = mn.representative(a);
          return m_nk.pure(exactla::unit_vec(m.dim, i), nk.pure_basis(j, c));
        });
        o.expect(exactla::is_invertible(assoc), tag + ": associator not bijective");
        o.expect(bimodule::is_linear(mn_k.module, m_nk.module, assoc, Linearity::Bilinear), tag + ": associator not bilinear");
        for (int r = 0; r < 3; ++r) {
          Vec x = random_vec(rng, m.dim, m.p()), y = random_vec(rng, n.dim, m.p()), z = random_vec(rng, k.dim, m.p());
          o.expect(assoc * mn_k.pure(mn.pure(x, y), z) == m_nk.pure(x, nk.pure(y, z)), tag + ": associator on pure tensors");
        }
      } else if (kind == 2) {
        // Θ: N ⊗ Q -> Hom(P, N), bijective, given by n ⊗ q ↦ (p ↦ n r(q ⊗ p)), natural in N
        const PicardPair& pr = pick(rng, use_s ? pool.pairs_s : pool.pairs_r);
        const auto& n = pick(rng, mods);
        const auto& n2 = pick(rng, mods);
        bimodule::TensorToHom th = bimodule::tensor_to_hom(pr, n);
        bimodule::TensorToHom th2 = bimodule::tensor_to_hom(pr, n2);
        o.expect(exactla::is_invertible(th.map), tag + ": Θ not bijective");
        Vec nv = random_vec(rng, n.dim, n.p()), qv = random_vec(rng, pr.Q.dim, n.p());
        Mat direct(n.dim, pr.P.dim, n.p());
        for (int c = 0; c < pr.P.dim; ++c) direct.set_col(c, n.right_of(pr.r_of(qv, exactla::unit_vec(pr.P.dim, c))) * nv);
        o.expect(th.hom.as_matrix(th.map * th.nq.pure(nv, qv)) == direct, tag + ": Θ formula");
        Mat g = random_hom(rng, n, n2);
        Mat g_q = bimodule::tensor_maps(th.nq, th2.nq, g, Mat::identity(pr.Q.dim, n.p()));
        for (int c = 0; c < th.nq.module.dim; ++c) {
          Vec tensor = exactla::unit_vec(th.nq.module.dim, c);
          Mat via_hom = g * th.hom.as_matrix(th.map * tensor);
          o.expect(th2.hom.as_matrix(th2.map * (g_q * tensor)) == via_hom, tag + ": Θ not natural");
        }
      } else {
        // hom composition closure
        const auto& m = pick(rng, mods);
        const auto& n = pick(rng, mods);
        const auto& k = pick(rng, mods);
        Mat f = random_hom(rng, m, n);
        Mat g = random_hom(rng, n, k);
        Mat gf = g * f;
        o.expect(bimodule::hom_space(m, k, Linearity::Bilinear).contains(gf.data()), tag + ": g∘f left the hom space");
        o.expect(bimodule::is_linear(m, k, gf, Linearity::Bilinear), tag + ": g∘f not bilinear");
      }
    } catch (const std::exception& e) {
      o.expect(false, tag + ": " + e.what());
    }
  }
  o.summary = std::to_string(kCases) + " seeded cases (" + std::to_string(counts[0]) + " unit, " +
              std::to_string(counts[1]) + " associativity, " + std::to_string(counts[2]) + " Θ, " +
              std::to_string(counts[3]) + " composition)";
  return o;
}

}  // namespace

int main() {
  std::cout << "kernels: " << exactla::kernels::active().name << "\n";
  std::vector<Loaded> fx;
  for (const char* name : testsupport::kAllFixtures) fx.push_back(load(name));

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"exactness of the four sequences on every fixture", exactness},
      {"Inv enumeration against the subspace-pair oracle", [&] { return inv_enumeration(fx); }},
      {"automorphism group orders against the oracle", [&] { return group_orders(fx); }},
      {"kernel descriptions and centrality", [&] { return kernel_descriptions(fx); }},
      {"unit identity for every automorphism and local unit", [&] { return unit_identity(fx); }},
      {"multiplication maps of Inv elements", [&] { return multiplication_maps(fx); }},
      {"induced maps of generated objects", [&] { return induced_maps(fx); }},
      {"two-sided inverses of object classes", [&] { return inverses(fx); }},
      {"constructive reductions round-trip", [&] { return reductions(fx); }},
      {"randomized tensor, Θ and hom identities", [&] { return substrate(fx); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = o.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << (i + 1) << ". " << criteria[i].title;
    if (!o.summary.empty()) std::cout << " [" << o.summary << "]";
    std::cout << "\n";
    for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) std::cout << "    " << o.failures[k] << "\n";
    if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
