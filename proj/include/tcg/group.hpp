#pragma once

// Virtually abelian groups given by extension data: a lattice N = Z^n, a
// finite list A of coset representatives (index 0 is the identity), the
// multiplication table of G/N, a cocycle t(a,b) and the action matrices M_a.
// An element (x, a) stands for the product x*a with x in N.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tcg/intlin.hpp"

namespace tcg {

using Vec = std::vector<std::int64_t>;

/// Small square matrix over signed 64-bit integers with overflow-checked
/// arithmetic. Used for action matrices and endomorphism matrices.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix scalar(std::size_t n, std::int64_t k);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  Vec apply(std::span<const std::int64_t> x) const;
  SquareMatrix operator*(const SquareMatrix& rhs) const;
  bool operator==(const SquareMatrix& rhs) const = default;

  IntMatrix to_int_matrix() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
Vec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
Vec negate(std::span<const std::int64_t> a);

struct VAGroupData {
  std::size_t n = 0;
  std::vector<std::string> cosets;
  std::vector<std::vector<std::size_t>> mult;  // m x m
  std::vector<std::vector<Vec>> cocycle;       // m x m vectors of length n
  std::vector<SquareMatrix> action;            // m matrices n x n

  std::size_t m() const noexcept { return cosets.size(); }
};

struct GroupElement {
  Vec vector;
  std::size_t coset = 0;

  // Orders by coset first, then the vector lexicographically.
  std::strong_ordering operator<=>(const GroupElement& rhs) const {
    if (auto c = coset <=> rhs.coset; c != 0) return c;
    return vector <=> rhs.vector;
  }
  bool operator==(const GroupElement& rhs) const = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

struct Endomorphism {
  SquareMatrix matrix;                   // phi restricted to N
  std::vector<GroupElement> rep_image;   // phi(a) for each coset representative
};

struct ValidationFailure {
  std::string identity;              // short name of the violated identity
  std::vector<std::size_t> indices;  // coset indices involved
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Data behind the twisted conjugation of a fixed coset a: the stabiliser set
/// E_a, the shifts M_a * phi^a(c) for c in E_a, and B_a = I - M_a * Phi.
struct TwistData {
  std::size_t coset = 0;
  std::vector<std::size_t> stabilizer;
  std::vector<Vec> shifts;  // parallel to stabilizer
  IntMatrix twisted_matrix;
};

GroupElement identity_element(const VAGroupData& group);
GroupElement coset_element(const VAGroupData& group, std::size_t coset);
GroupElement lattice_element(const VAGroupData& group, Vec vector);

GroupElement multiply(const VAGroupData& group, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const VAGroupData& group, const GroupElement& g);
std::size_t inverse_coset(const VAGroupData& group, std::size_t coset);
bool is_identity(const GroupElement& g);

ValidationReport validate_group(const VAGroupData& group);
ValidationReport validate_endo(const VAGroupData& group, const Endomorphism& endo);

/// Throws InvalidInputError describing the first failure.
void require_valid(const VAGroupData& group);
void require_valid(const VAGroupData& group, const Endomorphism& endo);

GroupElement apply_endo(const VAGroupData& group, const Endomorphism& endo, const GroupElement& g);

/// z * g * phi(z)^-1
GroupElement twisted_conjugate(const VAGroupData& group, const Endomorphism& endo, const GroupElement& z,
                               const GroupElement& g);

TwistData twist_data(const VAGroupData& group, const Endomorphism& endo, std::size_t coset);

/// Throws DimensionError unless g has the group's lattice rank and a valid coset.
void check_element(const VAGroupData& group, const GroupElement& g);

}  // namespace tcg
