#include "doctest.h"
#include "picseq/algebra/extension.hpp"
#include "picseq/error.hpp"
#include "support.hpp"

using namespace picseq;
using namespace picseq::algebra;
using exactla::Subspace;
using exactla::Vec;

TEST_SUITE("algebra") {

TEST_CASE("bundled algebras validate") {
  for (const char* name : testsupport::kAllFixtures) {
    RingExtension ext = testsupport::load_extension(name);
    CHECK(validate_algebra(*ext.S).ok);
    CHECK(validate_extension(ext).ok);
    REQUIRE(ext.R);
    CHECK(validate_algebra(*ext.R).ok);
  }
}

TEST_CASE("non-associative table names the failing triple") {
  // b0 b0 = b0, b0 b1 = b1, b1 b1 = b0: (b1 b1) b1 = b1 but b1 (b1 b1) = 0
  std::vector<Vec> products{{1, 0}, {0, 1}, {0, 0}, {1, 0}};
  Algebra a(2, {"x", "y"}, products, {{1, 0}});
  ValidationReport r = validate_algebra(a);
  CHECK_FALSE(r.ok);
  bool named = false;
  for (const auto& msg : r.problems) named = named || msg.find("(y, y, y)") != std::string::npos;
  CHECK(named);
}

TEST_CASE("local units of the triangular algebra") {
  RingExtension ext = testsupport::load_extension("fix-c");
  const Algebra& t = *ext.S;
  Vec e11{1, 0, 0};
  Vec e12{0, 1, 0};
  CHECK(unit_for(t, {e11}) == 0);
  CHECK(unit_for(t, {e11, e12}) == 2);
  CHECK(units_for(t, {e12}) == std::vector<int>{2});
  CHECK(validate_algebra(t).ok);
}

TEST_CASE("unit lookup in M2") {
  RingExtension ext = testsupport::load_extension("fix-a");
  CHECK(unit_for(*ext.S, {Vec{0, 1, 0, 0}}) == 0);
  Algebra no_units(2, {"a", "b"}, {{1, 0}, {0, 0}, {0, 0}, {0, 0}}, {{1, 0}});
  CHECK_THROWS_AS(unit_for(no_units, {Vec{0, 1}}), Error);
}

TEST_CASE("central units of corners") {
  RingExtension a = testsupport::load_extension("fix-a");
  auto units = corner_center_units(*a.S, Vec{1, 0, 0, 1});
  REQUIRE(units.size() == 1);
  CHECK(units[0] == Vec{1, 0, 0, 1});

  RingExtension b = testsupport::load_extension("fix-b");
  auto diag = corner_center_units(*b.R, Vec{1, 1});
  CHECK(diag.size() == 4);
  for (const Vec& z : diag) CHECK((z[0] != 0 && z[1] != 0));

  // corner of a field-like idempotent
  RingExtension c = testsupport::load_extension("fix-c");
  auto field = corner_center_units(*c.S, Vec{1, 0, 0});
  REQUIRE(field.size() == 1);
  CHECK(field[0] == Vec{1, 0, 0});
  CHECK(corner(*c.S, Vec{1, 0, 0}).dim() == 1);
}

TEST_CASE("extension validation") {
  RingExtension a = testsupport::load_extension("fix-a");
  CHECK(a.S->dim() == 4);
  CHECK(a.R->dim() == 2);
  RingExtension bad = make_extension(a.S, Subspace::span({{0, 1, 0, 0}}, 4, 2));
  CHECK_FALSE(bad.R);
  CHECK_FALSE(validate_extension(bad).ok);
  RingExtension whole = make_extension(a.S, Subspace::whole(4, 2));
  CHECK(validate_extension(whole).ok);
  CHECK(whole.to_r(Vec{1, 1, 0, 1}) == Vec{1, 1, 0, 1});
  CHECK_THROWS_AS(a.to_r(Vec{0, 1, 0, 0}), Error);
}

}
