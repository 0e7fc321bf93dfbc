#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tcg/errors.hpp"
#include "tcg/intlin.hpp"

using namespace tcg;

namespace {

IntMatrix diag_matrix(std::size_t rows, std::size_t cols, const std::vector<Integer>& d) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

void check_snf_invariants(const IntMatrix& m) {
  const auto s = snf(m);
  CHECK(s.P_inv * m * s.Q == diag_matrix(m.rows(), m.cols(), s.diag));
  CHECK(s.P * s.P_inv == IntMatrix::identity(m.rows()));
  CHECK(abs(determinant(s.P)) == 1);
  CHECK(abs(determinant(s.Q)) == 1);
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    CHECK(s.diag[i] > 0);
    if (i + 1 < s.diag.size()) CHECK(mpz_divisible_p(s.diag[i + 1].get_mpz_t(), s.diag[i].get_mpz_t()));
  }
  CHECK(s.diag == fixtures::invariant_factors_by_minors(m));
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("snf of identity and zero") {
  const auto id = snf(IntMatrix::identity(2));
  CHECK(id.diag == std::vector<Integer>{1, 1});
  CHECK(id.P == IntMatrix::identity(2));
  CHECK(id.Q == IntMatrix::identity(2));

  const auto zero = snf(IntMatrix(2, 2));
  CHECK(zero.rank() == 0);
  CHECK(zero.diag.empty());
}

TEST_CASE("snf of [[2,4],[4,4]] is diag(2,4)") {
  const IntMatrix m{{2, 4}, {4, 4}};
  // Oracle: D_1 = gcd of entries = 2, D_2 = |det| = 8.
  CHECK(fixtures::invariant_factors_by_minors(m) == std::vector<Integer>{2, 4});
  CHECK(snf(m).diag == std::vector<Integer>{2, 4});
  check_snf_invariants(m);
}

TEST_CASE("snf invariants on random square and rectangular matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    check_snf_invariants(fixtures::random_matrix(rng, n, n, trial % 2 ? 9 : 3));
  }
  for (int trial = 0; trial < 50; ++trial) {
    check_snf_invariants(fixtures::random_matrix(rng, 2, 4, 6));
    check_snf_invariants(fixtures::random_matrix(rng, 3, 2, 6));
  }
}

TEST_CASE("snf is deterministic") {
  const IntMatrix m{{3, -6, 9}, {12, 4, 0}, {-5, 7, 11}};
  const auto a = snf(m);
  const auto b = snf(m);
  CHECK(a.P == b.P);
  CHECK(a.Q == b.Q);
  CHECK(a.diag == b.diag);
}

TEST_CASE("snf survives entries beyond 64 bits") {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = Integer("98765432109876543210987654321");
  m(1, 0) = Integer("-55555555555555555555555");
  m(1, 1) = Integer("77777777777777777777777777777777");
  const auto s = snf(m);
  CHECK(s.P_inv * m * s.Q == diag_matrix(2, 2, s.diag));
  CHECK(s.diag[0] * s.diag[1] == abs(determinant(m)));
}

TEST_CASE("rank") {
  CHECK(rank(IntMatrix{{2, 0}, {0, 0}}) == 1);
  CHECK(rank(IntMatrix(3, 3)) == 0);
  CHECK(determinant(IntMatrix{{1, 1}, {-1, 1}}) == 2);
  CHECK(rank(IntMatrix{{1, 1}, {-1, 1}}) == 2);
}

TEST_CASE("image lattice") {
  const auto full = image_lattice(IntMatrix::identity(3));
  CHECK(full.rank() == 3);
  CHECK(full.basis == IntMatrix::identity(3));

  const auto line = image_lattice(IntMatrix{{2, 0}, {0, 0}});
  CHECK(line.rank() == 1);
  CHECK(line.basis == IntMatrix{{2}, {0}});

  const auto l = image_lattice(IntMatrix{{2, 4}, {4, 4}});
  CHECK(l.rank() == 2);
  CHECK(abs(determinant(l.basis)) == 8);
  // Lower-triangular, positive pivots, reduced entries left of a pivot.
  CHECK(l.basis(0, 1) == 0);
  CHECK(l.basis(0, 0) > 0);
  CHECK(l.basis(1, 1) > 0);
  CHECK(l.basis(1, 0) >= 0);
  CHECK(l.basis(1, 0) < l.basis(1, 1));
}

TEST_CASE("image lattice is canonical under unimodular column changes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = fixtures::random_matrix(rng, 3, 3, 5);
    const auto u = fixtures::random_matrix(rng, 3, 3, 2);
    if (abs(determinant(u)) != 1) continue;
    CHECK(image_lattice(m) == image_lattice(m * u));
    CHECK(image_lattice(m).rank() == rank(m));
  }
}

TEST_CASE("member") {
  const auto line = image_lattice(IntMatrix{{2, 0}, {0, 0}});
  CHECK(member(line, iv({4, 0})));
  CHECK_FALSE(member(line, iv({1, 0})));
  CHECK_FALSE(member(line, iv({2, 1})));
  const auto l = image_lattice(IntMatrix{{1, 1}, {-1, 1}});
  CHECK(member(l, iv({2, 0})));
  CHECK_FALSE(member(l, iv({1, 0})));
  CHECK_THROWS_AS(member(l, iv({1, 0, 0})), DimensionError);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = fixtures::random_matrix(rng, 3, 3, 4);
    const auto z = fixtures::random_matrix(rng, 3, 1, 5).column(0);
    CHECK(member(image_lattice(m), m.apply(z)));
  }
}

TEST_CASE("minimal_rep examples") {
  const auto id = snf(IntMatrix::identity(2));
  CHECK(minimal_rep(id, iv({17, -4})) == iv({0, 0}));

  const auto line = snf(IntMatrix{{2, 0}, {0, 0}});
  CHECK(minimal_rep(line, iv({5, 3})) == iv({1, 3}));

  const auto two = snf(IntMatrix{{2, 0}, {0, 2}});
  CHECK(minimal_rep(two, iv({-5, -3})) == iv({1, 1}));

  const auto zero = snf(IntMatrix(2, 2));
  CHECK(minimal_rep(zero, iv({-9, 4})) == iv({-9, 4}));
  CHECK_THROWS_AS(minimal_rep(two, iv({1})), DimensionError);
}

TEST_CASE("residue window") {
  CHECK(residue_window(1) == std::pair<Integer, Integer>{0, 0});
  CHECK(residue_window(2) == std::pair<Integer, Integer>{0, 1});
  CHECK(residue_window(3) == std::pair<Integer, Integer>{-1, 1});
  CHECK(residue_window(4) == std::pair<Integer, Integer>{-1, 2});
}

TEST_CASE("minimal_rep agrees with lattice membership and is idempotent") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto b = fixtures::random_matrix(rng, n, n, 4);
    const auto s = snf(b);
    const auto lattice = image_lattice(b);
    const auto x = fixtures::random_matrix(rng, n, 1, 12).column(0);
    const auto y = fixtures::random_matrix(rng, n, 1, 12).column(0);
    const auto rx = minimal_rep(s, x);
    const auto ry = minimal_rep(s, y);
    CHECK(minimal_rep(s, rx) == rx);
    IntVector diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - y[i];
    CHECK((rx == ry) == member(lattice, diff));
    IntVector shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = x[i] - rx[i];
    CHECK(member(lattice, shift));
  }
}

TEST_CASE("index_mod_k examples") {
  CHECK(index_mod_k(image_lattice(IntMatrix::identity(3)), 7) == 1);
  const auto line = image_lattice(IntMatrix{{2}, {0}});
  CHECK(index_mod_k(line, 4) == 8);
  CHECK(index_mod_k(line, 3) == 3);
  CHECK(fixtures::index_mod_k_closed_form(line, 4) == 8);
  CHECK(fixtures::index_mod_k_closed_form(line, 3) == 3);
  CHECK_THROWS(index_mod_k(line, 0));
}

TEST_CASE("isolator") {
  const auto a = isolator(image_lattice(IntMatrix{{2}, {0}}));
  CHECK(a.lattice.basis == IntMatrix{{1}, {0}});
  CHECK(a.index == 2);

  const auto b = isolator(image_lattice(IntMatrix{{2, 0}, {0, 3}}));
  CHECK(b.lattice.basis == IntMatrix::identity(2));
  CHECK(b.index == 6);

  const auto c = isolator(image_lattice(IntMatrix{{2, 4}, {4, 4}}));
  CHECK(c.lattice.basis == IntMatrix::identity(2));
  CHECK(c.index == 8);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = image_lattice(fixtures::random_matrix(rng, 3, 2, 6));
    const auto sq = isolator(h);
    CHECK(sq.lattice.rank() == h.rank());
    CHECK(isolator(sq.lattice).lattice == sq.lattice);
    CHECK(isolator(sq.lattice).index == 1);
    for (std::size_t j = 0; j < h.rank(); ++j) CHECK(member(sq.lattice, h.basis.column(j)));
  }
}
