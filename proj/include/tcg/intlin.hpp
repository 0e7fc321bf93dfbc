#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, lattices in
// Z^n, coset representatives, indices and isolators.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tcg {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Integer> entries() const noexcept { return entries_; }

  IntVector column(std::size_t j) const;
  IntVector apply(std::span<const Integer> x) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix transposed() const;

  /// Columns [first, first + count) as a new matrix.
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// [this | rhs], same row count required.
  IntMatrix hconcat(const IntMatrix& rhs) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// P^-1 * M * Q = diag(d_1, ..., d_l, 0, ...), d_1 | d_2 | ... | d_l, d_i > 0.
struct SNFDecomposition {
  IntMatrix P;      // rows x rows, unimodular
  IntMatrix P_inv;  // inverse of P, kept for coordinate changes
  IntMatrix Q;      // cols x cols, unimodular
  std::vector<Integer> diag;

  std::size_t rank() const noexcept { return diag.size(); }
  std::size_t ambient_rank() const noexcept { return P.rows(); }
};

/// Sublattice of Z^n in canonical column Hermite normal form: lower
/// echelon, positive pivots, entries left of a pivot reduced into [0, pivot).
struct Lattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;                       // ambient_rank x rank
  std::vector<std::size_t> pivot_rows;   // pivot row of each basis column

  std::size_t rank() const noexcept { return basis.cols(); }
  bool operator==(const Lattice& rhs) const = default;
};

SNFDecomposition snf(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

Lattice image_lattice(const IntMatrix& m);
bool member(const Lattice& lattice, std::span<const Integer> x);

/// Unique representative of x + Image(B) whose P-coordinates lie in the
/// window floor(-d_i/2)+1 .. floor(d_i/2) for i < rank; other coordinates kept.
IntVector minimal_rep(const SNFDecomposition& decomposition, std::span<const Integer> x);

/// [Z^n : H + (kZ)^n], read off the SNF of [basis(H) | k*I].
Integer index_mod_k(const Lattice& lattice, const Integer& k);

struct Isolator {
  Lattice lattice;  // sqrt(H)
  Integer index;    // |sqrt(H) / H|
};
Isolator isolator(const Lattice& lattice);

/// Residue window bounds for an invariant factor d > 0.
std::pair<Integer, Integer> residue_window(const Integer& d);

IntVector to_int_vector(std::span<const std::int64_t> x);
std::vector<std::int64_t> to_int64_vector(std::span<const Integer> x);

}  // namespace tcg
