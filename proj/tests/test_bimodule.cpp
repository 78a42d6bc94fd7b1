#include "doctest.h"
#include "picseq/bimodule/hom.hpp"
#include "picseq/bimodule/picard.hpp"
#include "picseq/error.hpp"
#include "picseq/extgroups/automorphisms.hpp"
#include "support.hpp"

using namespace picseq;
using namespace picseq::bimodule;
using exactla::Mat;
using exactla::Subspace;
using exactla::Vec;

namespace {

ExtensionModules views(const char* name) { return make_extension_modules(testsupport::load_extension(name)); }

// R = F_2 x F_2 twisted on the right by the swap of its two idempotents.
PicardPair swap_pair(const ExtensionModules& v) {
  Mat swap = Mat::from_rows({{0, 1}, {1, 0}}, 2);
  Bimodule p = twist(v.r_reg, swap);
  TensorProduct qp = tensor_over(p, p);
  const algebra::Algebra& r = *v.ext.R;
  Mat witness = descend_from_basis(qp, r.dim(), [&](int i, int j) {
    return r.multiply(exactla::unit_vec(r.dim(), i), swap * exactla::unit_vec(r.dim(), j));
  });
  return make_picard_pair(p, p, witness);
}

}  // namespace

TEST_SUITE("bimodule") {

TEST_CASE("regular and restricted views are valid and unital") {
  for (const char* name : testsupport::kAllFixtures) {
    ExtensionModules v = views(name);
    for (const Bimodule* m : {&v.r_reg, &v.s_reg, &v.s_rr, &v.s_sr, &v.s_rs}) {
      CHECK(validate_bimodule(*m).ok);
      CHECK(check_unital(*m));
    }
  }
}

TEST_CASE("unitality") {
  ExtensionModules v = views("fix-a");
  Bimodule dead = zero_bimodule(v.ext.R, v.ext.R);
  dead.dim = 1;
  dead.left_act.assign(2, Mat(1, 1, 2));
  dead.right_act.assign(2, Mat(1, 1, 2));
  CHECK(validate_bimodule(dead).ok);
  CHECK_FALSE(check_unital(dead));

  Subspace e12 = Subspace::span({{0, 1, 0, 0}}, 4, 2);
  CHECK(is_stable(v.s_rr, e12));
  CHECK(check_unital(sub_bimodule(v.s_rr, e12)));

  Bimodule sum = direct_sum(v.r_reg, dead);
  CHECK(largest_unital(sum).dim == 2);
  CHECK(unital_part(sum).dim() == 2);
  CHECK(largest_unital(v.r_reg).dim == 2);
  CHECK(largest_unital(zero_bimodule(v.ext.R, v.ext.R)).dim == 0);
}

TEST_CASE("hom spaces") {
  ExtensionModules d = views("fix-d");
  CHECK(hom_space(d.s_reg, d.s_reg, Linearity::Bilinear).dim() == 1);
  ExtensionModules a = views("fix-a");
  CHECK(hom_space(a.s_sr, a.s_sr, Linearity::Bilinear).dim() == 2);
  for (const Bimodule* m : {&a.r_reg, &a.s_rr, &a.s_reg}) {
    Subspace h = hom_space(*m, *m, Linearity::Bilinear);
    CHECK(h.contains(Mat::identity(m->dim, 2).data()));
  }
  CHECK_THROWS_AS(hom_space(a.r_reg, a.s_reg, Linearity::Bilinear), Error);
}

TEST_CASE("tensor products") {
  ExtensionModules a = views("fix-a");
  TensorProduct rr = tensor_over(a.r_reg, a.r_reg);
  CHECK(rr.module.dim == 2);
  CHECK(exactla::is_invertible(left_action_map(rr, a.r_reg)));
  CHECK(exactla::is_invertible(right_action_map(rr, a.r_reg)));

  Subspace x = Subspace::span({{0, 1, 0, 0}, {0, 0, 1, 0}}, 4, 2);
  Bimodule xm = sub_bimodule(a.s_rr, x);
  TensorProduct xx = tensor_over(xm, xm);
  CHECK(xx.module.dim == 2);
  CHECK(iso_search(xx.module, a.r_reg, Linearity::Bilinear));
  CHECK_FALSE(iso_search(xm, a.r_reg, Linearity::Bilinear));

  TensorProduct zero = tensor_over(a.r_reg, zero_bimodule(a.ext.R, a.ext.R));
  CHECK(zero.module.dim == 0);

  CHECK(xx.pure_basis(0, 0) == xx.pure(exactla::unit_vec(2, 0), exactla::unit_vec(2, 0)));
  auto [i, j] = xx.representative(0);
  CHECK(xx.projection * xx.section.col(0) == exactla::unit_vec(xx.module.dim, 0));
  CHECK((i >= 0 && j >= 0));
  CHECK_THROWS_AS(tensor_over(a.s_reg, a.r_reg), Error);
}

TEST_CASE("twists") {
  ExtensionModules b = views("fix-b");
  Mat id = Mat::identity(4, 3);
  Bimodule same = twist(b.s_reg, id);
  CHECK(same.right_act == b.s_reg.right_act);
  extgroups::MapGroup rings = extgroups::ring_automorphisms_over_base(b);
  REQUIRE(rings.group.order() == 2);
  for (const auto& k1 : rings.group.elements()) {
    for (const auto& k2 : rings.group.elements()) {
      const Mat& phi = rings.at(k1);
      const Mat& psi = rings.at(k2);
      CHECK(twist(twist(b.s_reg, phi), psi).right_act == twist(b.s_reg, phi * psi).right_act);
    }
    CHECK(iso_search(twist(b.s_reg, rings.at(k1)), b.s_reg, Linearity::Bilinear));
  }
  CHECK_THROWS_AS(twist(b.s_reg, Mat(4, 4, 3)), Error);
}

TEST_CASE("iso search") {
  ExtensionModules a = views("fix-a");
  auto self = iso_search(a.s_rr, a.s_rr, Linearity::Bilinear);
  REQUIRE(self);
  CHECK(exactla::is_invertible(*self));
  CHECK_FALSE(iso_search(a.r_reg, a.s_rr, Linearity::Bilinear));
}

TEST_CASE("multiplication isomorphisms of invertible pairs") {
  ExtensionModules a = views("fix-a");
  Subspace r = a.ext.r_space;
  MultiplicationIsos unit = multiplication_isos(a, r, r);
  CHECK(unit.left_invertible);
  CHECK(unit.right_invertible);
  CHECK(unit.unit_invertible);

  Subspace x = Subspace::span({{0, 1, 0, 0}, {0, 0, 1, 0}}, 4, 2);
  MultiplicationIsos m = multiplication_isos(a, x, x);
  CHECK(m.left_invertible);
  CHECK(m.right_invertible);
  CHECK(m.unit_invertible);
  CHECK(m.inverse_matches);
  CHECK(m.unit_choice_independent);

  Subspace e12 = Subspace::span({{0, 1, 0, 0}}, 4, 2);
  Subspace e21 = Subspace::span({{0, 0, 1, 0}}, 4, 2);
  try {
    multiplication_isos(a, e12, e21);
    FAIL("expected not-invertible-pair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertiblePair);
  }
  CHECK(product_span(*a.ext.S, x, x) == r);
}

TEST_CASE("Picard pairs and the tensor-to-hom map") {
  ExtensionModules a = views("fix-a");
  PicardPair unit = trivial_pair(a.ext.R);
  CHECK(check_coherence(unit).ok());
  TensorToHom t = tensor_to_hom(unit, a.r_reg);
  CHECK(t.map.rows() == 2);
  CHECK(exactla::is_invertible(t.map));

  PicardPair sw = swap_pair(a);
  CHECK(check_coherence(sw).ok());
  CHECK(check_coherence(swapped(sw)).ok());
  TensorToHom ts = tensor_to_hom(sw, a.r_reg);
  CHECK(ts.map.rows() == 2);
  CHECK(exactla::is_invertible(ts.map));

  TensorToHom tz = tensor_to_hom(unit, zero_bimodule(a.ext.R, a.ext.R));
  CHECK(tz.nq.module.dim == 0);
  CHECK(tz.hom.module.dim == 0);

  Mat zero(2, sw.qp.module.dim, 2);
  CHECK_THROWS_AS(make_picard_pair(sw.P, sw.Q, zero), Error);
}

}
