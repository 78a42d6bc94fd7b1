#include <algorithm>
#include <array>

#include "doctest.h"
#include "picseq/error.hpp"
#include "picseq/groupkit/group.hpp"

using namespace picseq::groupkit;

namespace {

// Z/2 x Z/2 on keys "ab".
FiniteGroup klein() {
  return FiniteGroup("V4", {"00", "01", "10", "11"},
                     [](const Key& x, const Key& y) {
                       Key out = "00";
                       out[0] = x[0] == y[0] ? '0' : '1';
                       out[1] = x[1] == y[1] ? '0' : '1';
                       return out;
                     },
                     "00");
}

// Z/n on decimal keys.
FiniteGroup cyclic(int n) {
  std::vector<Key> keys;
  for (int i = 0; i < n; ++i) keys.push_back(std::to_string(i));
  return FiniteGroup("Z" + std::to_string(n), keys,
                     [n](const Key& x, const Key& y) { return std::to_string((std::stoi(x) + std::stoi(y)) % n); },
                     "0");
}

// S3 as permutations written "abc" (image of 0, 1, 2).
FiniteGroup symmetric3() {
  std::vector<Key> keys;
  std::string s = "012";
  do keys.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return FiniteGroup("S3", keys,
                     [](const Key& x, const Key& y) {
                       Key out = "000";
                       for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(y[static_cast<std::size_t>(i)] - '0')];
                       return out;
                     },
                     "012");
}

}  // namespace

TEST_SUITE("groupkit") {

TEST_CASE("validation of small groups") {
  CHECK(validate_group(klein()).ok);
  CHECK(validate_group(cyclic(6)).ok);
  CHECK(validate_group(symmetric3()).ok);
  CHECK(validate_group(trivial_group("1")).ok);
  FiniteGroup broken("bad", {"0", "1"}, [](const Key&, const Key&) { return Key("1"); }, "0");
  CHECK_FALSE(validate_group(broken).ok);
  CHECK_THROWS_AS(FiniteGroup("dup", {"0", "0"}, cyclic(2).mul_fn(), "0"), picseq::Error);
}

TEST_CASE("inverse lookup") {
  FiniteGroup z = cyclic(5);
  CHECK(z.inverse("2") == "3");
  CHECK(symmetric3().inverse("120") == "201");
}

TEST_CASE("kernels, images and centers") {
  FiniteGroup v = klein();
  GroupHom id{"id", v, v, [](const Key& k) { return k; }};
  CHECK(validate_hom(id).ok);
  CHECK(kernel(id).order() == 1);
  GroupHom triv = trivial_hom(v, cyclic(3));
  CHECK(image(triv).order() == 1);
  CHECK(kernel(triv).order() == 4);
  CHECK(center(v).order() == 4);
  CHECK(center(symmetric3()).order() == 1);

  GroupHom parity{"first", v, cyclic(2), [](const Key& k) { return std::string(1, k[0]); }};
  CHECK(validate_hom(parity).ok);
  CHECK(kernel(parity).order() == 2);
  GroupHom bogus{"bogus", cyclic(3), cyclic(2), [](const Key& k) { return k == "1" ? Key("1") : Key("0"); }};
  CHECK_FALSE(validate_hom(bogus).ok);
}

TEST_CASE("exactness verdicts") {
  FiniteGroup v = klein();
  GroupHom parity{"first", v, cyclic(2), [](const Key& k) { return std::string(1, k[0]); }};
  FiniteGroup k = kernel(parity);
  CHECK(exact_at(inclusion(k, v), parity).exact);

  GroupHom start = trivial_hom(trivial_group("1"), v);
  GroupHom id{"id", v, v, [](const Key& x) { return x; }};
  CHECK(exact_at(start, id).exact);
  ExactnessReport r = exact_at(start, parity);
  CHECK_FALSE(r.exact);
  CHECK(r.weakly_exact);
  CHECK(r.kernel_not_in_image == std::vector<Key>{"01"});

  ExactnessReport by_predicate = exact_at(inclusion(k, v), [](const Key& x) { return x[0] == '0'; });
  CHECK(by_predicate.exact);
  ExactnessReport too_big = exact_at(id, [](const Key& x) { return x == "00"; });
  CHECK_FALSE(too_big.weakly_exact);
  CHECK(too_big.image_not_in_kernel.size() == 3);

  CHECK_THROWS_AS(exact_at(parity, id), picseq::Error);
}

TEST_CASE("central subgroups") {
  FiniteGroup s3 = symmetric3();
  CHECK(is_subgroup_of_center(s3.subgroup("1", {"012"}), s3));
  CHECK(is_subgroup_of_center(klein(), klein()));
  CHECK_FALSE(is_subgroup_of_center(s3.subgroup("swap", {"012", "102"}), s3));
  CHECK_THROWS_AS(is_subgroup_of_center(klein(), s3), picseq::Error);
}

}
