#include "doctest.h"
#include "numsg/cone.hpp"
#include "properties.hpp"

using numsg::Int;
using numsg::NumericalSemigroup;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

const std::vector<std::vector<Int>> kExtensionRows = {
    {11, 60, 72, 120, 144, 156, 180, 216, 228, 240, 300},
    {22, 71, 83, 120, 144, 167, 180, 216, 228, 240, 300},
    {33, 82, 94, 131, 155, 178, 180, 216, 239, 240, 300},
    {44, 93, 105, 142, 166, 189, 191, 227, 250, 240, 300},
    {55, 104, 116, 153, 177, 200, 202, 238, 261, 251, 300},
};

}  // namespace

TEST_CASE("reduction number") {
  CHECK(numsg::reduction_number(sg({2, 3})) == 1);
  CHECK(numsg::reduction_number(NumericalSemigroup::naturals()) == 0);
  CHECK(numsg::reduction_number(sg({11, 60, 72, 156})) == 5);
  CHECK(numsg::reduction_number(sg({11, 60, 68, 156})) <= 5);
}

TEST_CASE("l values") {
  CHECK(numsg::l_value(sg({2, 3}), 2) == 0);
  CHECK(numsg::l_value(NumericalSemigroup::naturals(), 3) == 0);
  CHECK(numsg::l_value(sg({6, 15, 7}), 6) >= 1);
  CHECK_THROWS_AS(numsg::l_value(sg({2, 3}), 1), numsg::SemigroupError);
  CHECK(numsg::big_l(NumericalSemigroup::naturals()) == 0);
  // ord(3 + 3) = 3 = ord(3) + ord(3) + 1
  CHECK(numsg::big_l(sg({2, 3})) == 1);
  CHECK(numsg::l_value(sg({2, 3}), 3) == 1);
  CHECK(numsg::big_l(sg({6, 15, 7})) >= 1);
}

TEST_CASE("beta profiles") {
  auto b = numsg::beta_profile(sg({2, 3}), 2);
  CHECK(b.d == 1);
  CHECK(b.beta == std::vector<std::size_t>{1, 1});
  b = numsg::beta_profile(NumericalSemigroup::naturals(), 4);
  CHECK(b.d == 3);
  CHECK(b.beta == std::vector<std::size_t>{1, 1, 1, 1});
  b = numsg::beta_profile(sg({3, 5, 7}), 3);
  CHECK(b.d == 1);
  CHECK(b.beta == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(numsg::is_beta_symmetric(b));
  CHECK(numsg::is_beta_symmetric(numsg::beta_profile(sg({2, 3}), 4)));
}

TEST_CASE("maximal Apéry elements") {
  CHECK(numsg::max_apery(sg({2, 3}), 2) == std::vector<Int>{3});
  CHECK(numsg::max_m_apery(sg({2, 3}), 2) == std::vector<Int>{3});
  CHECK(numsg::max_apery(sg({3, 5, 7}), 3) == std::vector<Int>{5, 7});
  CHECK(numsg::max_m_apery(sg({3, 5, 7}), 3) == std::vector<Int>{5, 7});
  CHECK(numsg::max_apery(NumericalSemigroup::naturals(), 3) == std::vector<Int>{2});
  CHECK(numsg::max_m_apery(NumericalSemigroup::naturals(), 3) == std::vector<Int>{2});
}

TEST_CASE("symmetry") {
  CHECK(numsg::is_symmetric(sg({2, 3})));
  CHECK_FALSE(numsg::is_symmetric(sg({3, 5, 7})));
  CHECK(numsg::is_symmetric(NumericalSemigroup::naturals()));
  CHECK(numsg::is_symmetric(sg({6, 7, 15})));
}

TEST_CASE("purity") {
  auto p = numsg::purity(sg({3, 5, 7}), 3);
  CHECK(p.pure);
  CHECK(p.m_pure);
  p = numsg::purity(sg({2, 3}), 2);
  CHECK(p.pure);
  CHECK(p.m_pure);
  const auto s = sg({11, 60, 72, 156});
  const auto q = numsg::purity(s, 11);
  CHECK(q.m_pure == (q.pure && numsg::max_apery(s, 11) == numsg::max_m_apery(s, 11)));
  CHECK_FALSE(numsg::is_symmetric(s));
  CHECK_FALSE(numsg::is_gorenstein_tangent_cone(s));
}

TEST_CASE("Cohen-Macaulay tangent cones") {
  CHECK_FALSE(numsg::is_cm_tangent_cone(sg({6, 15, 7})));
  CHECK(numsg::is_cm_tangent_cone(sg({11, 60, 72, 156})));
  CHECK(numsg::is_cm_tangent_cone(sg({11, 60, 68, 156})));
  CHECK(numsg::is_cm_tangent_cone(sg({2, 3})));
  CHECK(numsg::is_cm_tangent_cone(NumericalSemigroup::naturals()));
  CHECK_FALSE(numsg::apery_cm_criterion(sg({6, 7, 15})));
}

TEST_CASE("<5,8,28> collapses to <5,8>") {
  // 28 = 4*5 + 8, so 28 is not a minimal generator
  const auto s = sg({5, 8, 28});
  CHECK(s.generators() == std::vector<Int>{5, 8});
  CHECK(s.ord(28) == 5);
  CHECK(s.ord(48) == 9);
  CHECK(numsg::is_cm_tangent_cone(s));
  CHECK(numsg::apery_cm_criterion(s));
}

TEST_CASE("Gorenstein tangent cones") {
  CHECK(numsg::is_gorenstein_tangent_cone(sg({2, 3})));
  CHECK_FALSE(numsg::is_gorenstein_tangent_cone(sg({3, 5, 7})));
  CHECK_FALSE(numsg::is_gorenstein_tangent_cone(sg({6, 15, 7})));
  CHECK(numsg::is_gorenstein_tangent_cone(NumericalSemigroup::naturals()));
}

TEST_CASE("relative M-purity of symmetric semigroups") {
  CHECK(numsg::relative_m_pure_symmetric(sg({2, 3}), 2));
  CHECK(numsg::relative_m_pure_symmetric(sg({2, 3}), 4));
  for (Int q = 2; q < 9; ++q) CHECK(numsg::relative_m_pure_symmetric(NumericalSemigroup::naturals(), q));
  try {
    numsg::relative_m_pure_symmetric(sg({3, 5, 7}), 3);
    FAIL("expected NotSymmetric");
  } catch (const numsg::SemigroupError& e) {
    CHECK(e.code() == numsg::ErrorCode::NotSymmetric);
  }
}

TEST_CASE("Hilbert functions") {
  auto h = numsg::hilbert_function(sg({2, 3}));
  CHECK(h.values == std::vector<std::size_t>{1, 2});
  CHECK(h.stable_value == 2);
  CHECK(h.nondecreasing);
  h = numsg::hilbert_function(NumericalSemigroup::naturals());
  CHECK(h.values == std::vector<std::size_t>{1});
  CHECK(h.stable_value == 1);
  h = numsg::hilbert_function(sg({11, 60, 72, 156}));
  CHECK(h.values == std::vector<std::size_t>{1, 4, 7, 9, 10, 11});
  CHECK(h.nondecreasing);
  CHECK(numsg::hilbert_function(sg({11, 60, 68, 156})).nondecreasing);
  const auto j = numsg::to_json(h);
  CHECK(j["classification"] == "nondecreasing");
  CHECK(j["stable_value"] == 11);
}

TEST_CASE("Apéry table of the extension of <5,6,13>") {
  const auto table = numsg::apery_table(sg({11, 60, 72, 156}));
  CHECK(table.base == 11);
  CHECK(table.reduction_number == 5);
  REQUIRE(table.rows.size() == 7);
  CHECK(table.rows[0].front() == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(table.rows[n] == kExtensionRows[n - 1]);
  const std::string text = numsg::render_table(table);
  CHECK(text.find("AP(3M) |  33 |  82 |  94 | 131 | 155 | 178 | 180 | 216 | 239 | 240 | 300") != std::string::npos);
  const auto j = numsg::to_json(table);
  CHECK(j["base"] == 11);
  CHECK(j["reduction_number"] == 5);
  CHECK(j["rows"][2] == kExtensionRows[1]);
  CHECK(j.size() == 3);
}

TEST_CASE("small Apéry tables") {
  auto table = numsg::apery_table(NumericalSemigroup::naturals());
  CHECK(table.rows == std::vector<std::vector<Int>>{{0}, {1}});
  table = numsg::apery_table(sg({2, 3}));
  CHECK(table.rows == std::vector<std::vector<Int>>{{0, 3}, {2, 3}, {4, 5}});
}

TEST_CASE("cone properties on the sample") {
  numsg::props::Failures failures;
  for (const auto& s : numsg::props::standard_sample(120, 13)) numsg::props::check_cone(s, failures);
  for (std::size_t i = 0; i < failures.size() && i < 10; ++i) MESSAGE(failures[i]);
  CHECK(failures.empty());
}
