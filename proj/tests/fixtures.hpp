#pragma once

// Groups, endomorphisms and oracles shared by the unit and acceptance tests.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tcg/group.hpp"
#include "tcg/growth.hpp"
#include "tcg/intlin.hpp"
#include "tcg/tc.hpp"

namespace fixtures {

using tcg::Endomorphism;
using tcg::GroupElement;
using tcg::IntMatrix;
using tcg::Integer;
using tcg::SquareMatrix;
using tcg::VAGroupData;
using tcg::Vec;

inline SquareMatrix mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return SquareMatrix(2, {a, b, c, d});
}

/// Two-coset extension of Z^2 with t acting by `mt` and t*t = (tt, e).
inline VAGroupData two_coset_group(SquareMatrix mt, Vec tt = {0, 0}, const char* label = "t") {
  VAGroupData g;
  g.n = 2;
  g.cosets = {"e", label};
  g.mult = {{0, 1}, {1, 0}};
  g.cocycle = {{{0, 0}, {0, 0}}, {{0, 0}, std::move(tt)}};
  g.action = {SquareMatrix::identity(2), std::move(mt)};
  return g;
}

/// Z^2 x| Z/2 with t acting as -I.
inline VAGroupData semidirect() { return two_coset_group(mat2(-1, 0, 0, -1)); }
/// Z^2 x Z/2.
inline VAGroupData direct() { return two_coset_group(SquareMatrix::identity(2)); }
/// Non-split: s acts as diag(1,-1), s^2 = e_1.
inline VAGroupData klein() { return two_coset_group(mat2(1, 0, 0, -1), {1, 0}, "s"); }

inline VAGroupData lattice_group(std::size_t n) {
  VAGroupData g;
  g.n = n;
  g.cosets = {"e"};
  g.mult = {{0}};
  g.cocycle = {{Vec(n, 0)}};
  g.action = {SquareMatrix::identity(n)};
  return g;
}

inline Endomorphism endo(SquareMatrix m, std::vector<std::size_t> images) {
  Endomorphism e;
  const std::size_t n = m.size();
  e.matrix = std::move(m);
  for (auto c : images) e.rep_image.push_back(GroupElement{Vec(n, 0), c});
  return e;
}

inline Endomorphism phi1() { return endo(mat2(-1, 0, 0, -1), {0, 1}); }
inline Endomorphism phi_id() { return endo(SquareMatrix::identity(2), {0, 1}); }
inline Endomorphism phi3() { return endo(mat2(-1, 0, 0, 1), {0, 1}); }

inline GroupElement el(Vec v, std::size_t coset) { return GroupElement{std::move(v), coset}; }

inline std::vector<GroupElement> standard_gens() { return {el({1, 0}, 0), el({0, 1}, 0), el({0, 0}, 1)}; }
/// {e1+e2, e2, t, t*e1}; t*e1 = (-e1, t) for t acting as -I.
inline std::vector<GroupElement> skewed_gens() {
  return {el({1, 1}, 0), el({0, 1}, 0), el({0, 0}, 1), el({-1, 0}, 1)};
}

inline GroupElement random_element(std::mt19937_64& rng, const VAGroupData& g, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  std::uniform_int_distribution<std::size_t> coset(0, g.m() - 1);
  GroupElement out{Vec(g.n), coset(rng)};
  for (auto& v : out.vector) v = coord(rng);
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Oracle for invariant factors: d_1 ... d_k = gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> divisors;  // D_k
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t idx, std::size_t start) {
      if (idx == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t i = start; i < r; ++i) {
        rows[idx] = i;
        pick_rows(idx + 1, i + 1);
      }
    };
    pick_cols = [&](std::size_t idx, std::size_t start) {
      if (idx == k) {
        IntMatrix sub(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(tcg::determinant(sub)).get_mpz_t());
        return;
      }
      for (std::size_t j = start; j < c; ++j) {
        cols[idx] = j;
        pick_cols(idx + 1, j + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  Integer prev = 1;
  for (const auto& d : divisors) {
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Closed form prod_i gcd(d_i, k) * k^(n - l) for [Z^n : H + (kZ)^n].
inline Integer index_mod_k_closed_form(const tcg::Lattice& h, const Integer& k) {
  const auto invariants = invariant_factors_by_minors(h.basis);
  Integer out = 1, g;
  for (const auto& d : invariants) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), k.get_mpz_t());
    out *= g;
  }
  for (std::size_t i = invariants.size(); i < h.ambient_rank; ++i) out *= k;
  return out;
}

/// Reduce x modulo the HNF basis: each pivot coordinate into [0, pivot).
/// A second canonical coset label, independent of the Smith-form route.
inline Vec hnf_reduce(const tcg::Lattice& lattice, const Vec& x) {
  tcg::IntVector r = tcg::to_int_vector(x);
  Integer q;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    const std::size_t p = lattice.pivot_rows[j];
    mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), lattice.basis(p, j).get_mpz_t());
    for (std::size_t i = 0; i < lattice.ambient_rank; ++i) r[i] -= q * lattice.basis(i, j);
  }
  return tcg::to_int64_vector(r);
}

/// Brute-force class count inside a ball: union-find linking g to
/// z g phi(z)^-1 for every conjugator z in `conjugators` when the image stays
/// in the ball.
inline std::size_t classes_by_conjugator_search(const VAGroupData& group, const Endomorphism& phi,
                                                const std::vector<GroupElement>& ball,
                                                const std::vector<GroupElement>& conjugators) {
  std::vector<GroupElement> sorted = ball;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> parent(sorted.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = sorted.size();
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (const auto& z : conjugators) {
      const auto h = tcg::twisted_conjugate(group, phi, z, sorted[i]);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), h);
      if (it == sorted.end() || !(*it == h)) continue;
      const auto a = find(i), b = find(static_cast<std::size_t>(it - sorted.begin()));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  return components;
}

inline std::vector<GroupElement> flatten(const tcg::BallEnumeration& ball, std::size_t r) {
  std::vector<GroupElement> out;
  for (std::size_t l = 0; l <= r && l < ball.layers.size(); ++l)
    out.insert(out.end(), ball.layers[l].begin(), ball.layers[l].end());
  return out;
}

}  // namespace fixtures
