#include <doctest.h>

#include "cusplab/classify.hpp"
#include "cusplab/errors.hpp"
#include "cusplab/model_curves.hpp"
#include "test_support.hpp"

using namespace cusplab;

namespace {

Jet monomials(int dim, std::initializer_list<std::tuple<int, int, long>> entries,
              int order = kDefaultJetOrder) {
  Jet j = Jet::zero(dim, order);
  for (const auto& [ord, comp, c] : entries) {
    RatVec v = j.at(ord);
    v[comp] += make_rational(c);
    j.set(ord, std::move(v));
  }
  return j;
}

}  // namespace

TEST_CASE("solve_in_span basics") {
  const RatVec zero = {Rational(0), Rational(0)};
  const RatVec v12 = {Rational(1), Rational(2)};
  const RatVec v24 = {Rational(2), Rational(4)};
  const RatVec e1 = {Rational(1), Rational(0)};
  const RatVec ones = {Rational(1), Rational(1)};

  auto c0 = solve_in_span(zero, {v12});
  REQUIRE(c0);
  CHECK((*c0)[0] == 0);
  auto c1 = solve_in_span(v24, {v12});
  REQUIRE(c1);
  CHECK((*c1)[0] == 2);
  CHECK(!solve_in_span(ones, {e1}));
  CHECK_THROWS_AS(solve_in_span(ones, {v12, v24}), error);  // dependent basis
}

TEST_CASE("multiplicity extraction") {
  CHECK(*multiplicity(monomials(2, {{2, 0, 1}, {3, 1, 1}})) == 2);
  CHECK(*multiplicity(monomials(3, {{3, 0, 1}, {4, 0, 1}, {5, 1, 1}})) == 3);
  CHECK(!multiplicity(Jet::zero(2, kDefaultJetOrder)));
  CHECK(classify(Jet::zero(2, kDefaultJetOrder)).tag ==
        CuspTag::UndeterminedMultiplicity);
}

TEST_CASE("catalog models classify to their own tag") {
  for (const auto& model : model_catalog()) {
    for (int dim : {model.min_dim, 4}) {
      CAPTURE(model.name);
      CAPTURE(dim);
      const CuspClass got = classify(model_jet(model, dim));
      CHECK(got.tag == model.tag);
      CHECK(got.sigma == model.sigma);
    }
  }
}

TEST_CASE("worked examples") {
  SUBCASE("(t^3, t^7 + t^8, 0)") {
    const CuspClass got = classify(monomials(3, {{3, 0, 1}, {7, 1, 1}, {8, 1, 1}}));
    CHECK(got.tag == CuspTag::C37);
    CHECK(got.sigma == 1);
    CHECK(got.scalars.at("lambda") == 0);
    CHECK(got.scalars.at("mu") == 0);
    CHECK(got.scalars.at("A8") == 0);
    CHECK(got.scalars.at("B8") == 1);
    CHECK(is_zero_vec(got.derived.at("V11")));
  }
  SUBCASE("(t^4, t^5 - t^7, 0)") {
    const CuspClass got = classify(monomials(3, {{4, 0, 1}, {5, 1, 1}, {7, 1, -1}}));
    CHECK(got.tag == CuspTag::C45);
    CHECK(got.sigma == -1);
    CHECK(got.scalars.at("lambda2") == 0);
    CHECK(got.scalars.at("lambda3") == 0);
    CHECK(got.scalars.at("mu1") == 0);
    CHECK(got.scalars.at("mu2") == -1);
    CHECK(is_zero_vec(got.derived.at("V4511")));
  }
  SUBCASE("(t^2, t^3, 0, 0) in R^4") {
    CHECK(classify(monomials(4, {{2, 0, 1}, {3, 1, 1}})).tag == CuspTag::C23);
  }
  SUBCASE("(t^2, t^4) falls outside the catalog") {
    const CuspClass got = classify(monomials(2, {{2, 0, 1}, {4, 1, 1}}));
    CHECK(got.tag == CuspTag::OutsideCatalog);
    CHECK(!got.trace.empty());
  }
  SUBCASE("multiplicity 5 falls outside the catalog") {
    CHECK(classify(monomials(2, {{5, 0, 1}, {6, 1, 1}})).tag ==
          CuspTag::OutsideCatalog);
  }
  SUBCASE("regular curves fall outside the catalog") {
    CHECK(classify(monomials(2, {{1, 0, 1}, {2, 1, 1}})).tag ==
          CuspTag::OutsideCatalog);
  }
}

TEST_CASE("planar sections never reach the space-only classes") {
  // gamma^[5] lands in span<gamma^[3], gamma^[4]> automatically in R^2
  const CuspClass got = classify(monomials(2, {{3, 0, 1}, {4, 1, 1}, {5, 1, 1}}));
  CHECK(got.tag == CuspTag::C34);
}

TEST_CASE("insufficient order names the required depth") {
  // (t^2, t^4) to order 6: the chain needs gamma^[7]
  const Jet j = monomials(2, {{2, 0, 1}, {4, 1, 1}}, 6);
  try {
    classify(j);
    FAIL("expected insufficient_order");
  } catch (const error& e) {
    CHECK(e.code() == errc::insufficient_order);
    CHECK(e.detail() == 7);
  }
  // the (3,7)-family needs order 11 once V8 is dependent
  const Jet deep = monomials(3, {{3, 0, 1}, {7, 1, 1}}, 10);
  try {
    classify(deep);
    FAIL("expected insufficient_order");
  } catch (const error& e) {
    CHECK(e.code() == errc::insufficient_order);
    CHECK(e.detail() == 11);
  }
}

TEST_CASE("shallow jets still classify what they can") {
  CHECK(classify(monomials(2, {{2, 0, 1}, {3, 1, 1}}, 3)).tag == CuspTag::C23);
  CHECK(classify(monomials(3, {{3, 0, 1}, {4, 1, 1}, {5, 2, 1}}, 5)).tag ==
        CuspTag::C345);
}

TEST_CASE("random_a_equivalence: seed 0 is the identity") {
  const Jet jet = model_jet("C357", 3);
  CHECK(random_a_equivalence(jet, 0) == jet);
}

TEST_CASE("multiplicity is invariant under random equivalences") {
  std::mt19937_64 rng(31337);
  for (const auto& model : model_catalog()) {
    const Jet jet = model_jet(model, 4);
    const Jet moved = random_a_equivalence(jet, rng());
    CHECK(*multiplicity(moved) == *multiplicity(jet));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = static_cast<int>(testgen::draw(rng, 2, 4));
    const int m = static_cast<int>(testgen::draw(rng, 1, 4));
    Jet jet = testgen::random_jet(rng, dim, 11, m);
    if (is_zero_vec(jet.at(m))) jet.set(m, RatVec(dim, Rational(1)));
    CHECK(*multiplicity(random_a_equivalence(jet, rng())) == m);
  }
}

TEST_CASE("span predicates of Prop-2.7 type are invariant") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = static_cast<int>(testgen::draw(rng, 2, 4));
    const int m = static_cast<int>(testgen::draw(rng, 2, 4));
    Jet jet = testgen::random_jet(rng, dim, 11, m);
    if (is_zero_vec(jet.at(m))) jet.set(m, RatVec(dim, Rational(1)));
    const Jet moved = random_a_equivalence(jet, rng());
    for (int n = m + 1; n <= 2 * m - 1 && n <= 11; ++n) {
      std::vector<RatVec> basis, moved_basis;
      for (int i = m; i < n; ++i) {
        basis.push_back(jet.at(i));
        moved_basis.push_back(moved.at(i));
      }
      // guard: bases along this range can be dependent for random jets
      if (!rat_independent(basis) || !rat_independent(moved_basis)) continue;
      const bool before = solve_in_span(jet.at(n), basis).has_value();
      const bool after = solve_in_span(moved.at(n), moved_basis).has_value();
      CHECK(before == after);
    }
  }
}

TEST_CASE("classification survives random equivalences (sample)") {
  std::mt19937_64 rng(2025);
  for (const auto& model : model_catalog()) {
    const Jet jet = model_jet(model, 4, 11);
    for (int k = 0; k < 5; ++k) {
      const CuspClass got = classify(random_a_equivalence(jet, rng()));
      CAPTURE(model.name);
      CHECK(got.tag == model.tag);
      CHECK(got.sigma == model.sigma);
    }
  }
}
