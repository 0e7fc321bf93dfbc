#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tcg/errors.hpp"
#include "tcg/group.hpp"

using namespace tcg;
using fixtures::el;

TEST_CASE("multiply follows the extension law") {
  const auto g = fixtures::semidirect();
  const auto x = el({1, 2}, 1);
  CHECK(multiply(g, x, identity_element(g)) == x);
  CHECK(multiply(g, identity_element(g), x) == x);
  CHECK(multiply(g, el({1, 2}, 1), el({3, 4}, 1)) == el({-2, -2}, 0));
  CHECK_THROWS_AS(multiply(g, el({1}, 0), x), DimensionError);
  CHECK_THROWS_AS(multiply(g, el({1, 0}, 2), x), DimensionError);

  const auto k = fixtures::klein();
  // s * s = e_1 in the non-split group.
  CHECK(multiply(k, coset_element(k, 1), coset_element(k, 1)) == el({1, 0}, 0));
}

TEST_CASE("inverse") {
  const auto g = fixtures::semidirect();
  CHECK(inverse(g, identity_element(g)) == identity_element(g));
  CHECK(inverse(g, el({1, 2}, 1)) == el({1, 2}, 1));
  const auto k = fixtures::klein();
  CHECK(inverse(k, coset_element(k, 1)) == el({-1, 0}, 1));
}

TEST_CASE("group axioms on random samples") {
  std::mt19937_64 rng(1);
  for (const auto& g : {fixtures::semidirect(), fixtures::direct(), fixtures::klein()}) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = fixtures::random_element(rng, g, 50);
      const auto b = fixtures::random_element(rng, g, 50);
      const auto c = fixtures::random_element(rng, g, 50);
      CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
      CHECK(is_identity(multiply(g, a, inverse(g, a))));
      CHECK(is_identity(multiply(g, inverse(g, a), a)));
    }
  }
}

TEST_CASE("validate_group") {
  CHECK(validate_group(fixtures::semidirect()).ok());
  CHECK(validate_group(fixtures::direct()).ok());
  CHECK(validate_group(fixtures::klein()).ok());
  CHECK(validate_group(fixtures::lattice_group(3)).ok());

  auto broken_table = fixtures::two_coset_group(fixtures::mat2(-1, 0, 0, 1));
  broken_table.mult[1][1] = 1;
  const auto r = validate_group(broken_table);
  CHECK_FALSE(r.ok());

  auto broken_cocycle = fixtures::semidirect();
  broken_cocycle.cocycle[1][1] = {1, 0};
  const auto c = validate_group(broken_cocycle);
  REQUIRE_FALSE(c.ok());
  CHECK(c.failures.front().identity == "cocycle");
  CHECK(c.failures.front().indices == std::vector<std::size_t>{1, 1, 1});

  auto not_unimodular = fixtures::semidirect();
  not_unimodular.action[1] = fixtures::mat2(2, 0, 0, 1);
  CHECK_FALSE(validate_group(not_unimodular).ok());

  auto incompatible = fixtures::semidirect();
  incompatible.action[1] = fixtures::mat2(0, 1, 1, 1);
  const auto ic = validate_group(incompatible);
  REQUIRE_FALSE(ic.ok());
  CHECK(ic.failures.front().identity == "action-compatibility");

  auto ragged = fixtures::semidirect();
  ragged.cocycle[0].pop_back();
  CHECK_FALSE(validate_group(ragged).ok());

  VAGroupData empty;
  CHECK_FALSE(validate_group(empty).ok());
}

TEST_CASE("validate_endo") {
  const auto g = fixtures::semidirect();
  CHECK(validate_endo(g, fixtures::phi1()).ok());
  CHECK(validate_endo(g, fixtures::phi3()).ok());
  CHECK(validate_endo(g, fixtures::phi_id()).ok());
  CHECK(validate_endo(g, fixtures::endo(fixtures::mat2(1, 0, 0, 2), {0, 1})).ok());

  // Swap matrix with phi(t) = e: Phi M_t = -Phi but M_e Phi = Phi.
  const auto bad = validate_endo(g, fixtures::endo(fixtures::mat2(0, 1, 1, 0), {0, 0}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failures.front().identity == "intertwining");

  auto moved_identity = fixtures::phi1();
  moved_identity.rep_image[0].vector = {1, 0};
  CHECK_FALSE(validate_endo(g, moved_identity).ok());

  // On the non-split group phi(s) must square to phi(e_1).
  const auto k = fixtures::klein();
  CHECK(validate_endo(k, fixtures::endo(SquareMatrix::identity(2), {0, 1})).ok());
  CHECK_FALSE(validate_endo(k, fixtures::endo(fixtures::mat2(2, 0, 0, 1), {0, 1})).ok());
  auto stretched = fixtures::endo(fixtures::mat2(3, 0, 0, 2), {0, 1});
  stretched.rep_image[1].vector = {1, 0};
  CHECK(validate_endo(k, stretched).ok());
  CHECK_FALSE(validate_endo(k, fixtures::endo(fixtures::mat2(2, 0, 0, 1), {0, 0})).ok());

  CHECK_FALSE(validate_endo(g, fixtures::endo(SquareMatrix::identity(3), {0, 1})).ok());
}

TEST_CASE("apply_endo is a homomorphism") {
  const auto g = fixtures::semidirect();
  const auto phi = fixtures::phi1();
  CHECK(is_identity(apply_endo(g, phi, identity_element(g))));
  CHECK(apply_endo(g, phi, el({5, 3}, 0)) == el({-5, -3}, 0));

  std::mt19937_64 rng(2);
  struct Case {
    VAGroupData group;
    Endomorphism phi;
  };
  auto stretched = fixtures::endo(fixtures::mat2(3, 0, 0, 2), {0, 1});
  stretched.rep_image[1].vector = {1, 0};
  const std::vector<Case> cases{{fixtures::semidirect(), fixtures::phi1()},
                                {fixtures::semidirect(), fixtures::phi3()},
                                {fixtures::direct(), fixtures::endo(fixtures::mat2(0, -1, 1, 0), {0, 0})},
                                {fixtures::klein(), stretched}};
  for (const auto& c : cases) {
    for (int i = 0; i < 1000; ++i) {
      const auto a = fixtures::random_element(rng, c.group, 40);
      const auto b = fixtures::random_element(rng, c.group, 40);
      CHECK(apply_endo(c.group, c.phi, multiply(c.group, a, b)) ==
            multiply(c.group, apply_endo(c.group, c.phi, a), apply_endo(c.group, c.phi, b)));
    }
  }
}

TEST_CASE("twisted_conjugate") {
  const auto g = fixtures::semidirect();
  const auto phi = fixtures::phi1();
  const auto x = el({4, -7}, 1);
  CHECK(twisted_conjugate(g, phi, identity_element(g), x) == x);
  CHECK(twisted_conjugate(g, phi, el({1, 0}, 0), el({0, 0}, 1)) == el({0, 0}, 1));
}

TEST_CASE("twist_data on the semidirect product") {
  const auto g = fixtures::semidirect();
  const auto e = twist_data(g, fixtures::phi1(), 0);
  CHECK(e.stabilizer == std::vector<std::size_t>{0, 1});
  CHECK(e.shifts == std::vector<Vec>{{0, 0}, {0, 0}});
  CHECK(e.twisted_matrix == IntMatrix{{2, 0}, {0, 2}});

  const auto t = twist_data(g, fixtures::phi1(), 1);
  CHECK(t.stabilizer == std::vector<std::size_t>{0, 1});
  CHECK(t.twisted_matrix.is_zero());
}

TEST_CASE("twist_data invariants") {
  struct Case {
    VAGroupData group;
    Endomorphism phi;
    bool identity_on_quotient;
  };
  auto stretched = fixtures::endo(fixtures::mat2(3, 0, 0, 2), {0, 1});
  stretched.rep_image[1].vector = {1, 0};
  const std::vector<Case> cases{
      {fixtures::semidirect(), fixtures::phi1(), true},
      {fixtures::semidirect(), fixtures::phi3(), true},
      {fixtures::semidirect(), fixtures::phi_id(), true},
      {fixtures::direct(), fixtures::endo(fixtures::mat2(0, -1, 1, 0), {0, 0}), false},
      {fixtures::klein(), fixtures::endo(SquareMatrix::identity(2), {0, 1}), true},
      {fixtures::klein(), stretched, true},
  };
  for (const auto& c : cases) {
    for (std::size_t a = 0; a < c.group.m(); ++a) {
      const auto data = twist_data(c.group, c.phi, a);
      REQUIRE(!data.stabilizer.empty());
      CHECK(data.stabilizer.front() == 0);
      CHECK(data.shifts.front() == Vec(c.group.n, 0));
      if (c.identity_on_quotient) CHECK(data.stabilizer.size() == c.group.m());
      for (auto cc : data.stabilizer) {
        const auto mc = c.group.action[cc].to_int_matrix();
        CHECK(data.twisted_matrix * mc == mc * data.twisted_matrix);
      }
    }
  }
}
