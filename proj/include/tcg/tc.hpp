#pragma once

// Twisted conjugacy engine: per-coset twisted lattices, canonical labels of
// twisted conjugacy classes, Reidemeister numbers, predicted growth degrees
// and the induced classes on the finite quotients G/(kZ)^n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcg/group.hpp"
#include "tcg/intlin.hpp"

namespace tcg {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// B_a = I - M_a * Phi for one coset, with its Smith form and image lattice.
struct CosetLattice {
  std::size_t coset = 0;
  IntMatrix twisted;
  SNFDecomposition snf;
  Lattice image;
  std::size_t rank = 0;
};

/// Canonical label of a twisted conjugacy class: a coset plus a minimal
/// representative residue. Ordered by coset, then residue lexicographically.
struct ClassCanonicalForm {
  std::size_t coset = 0;
  Vec residue;

  std::strong_ordering operator<=>(const ClassCanonicalForm& rhs) const {
    if (auto c = coset <=> rhs.coset; c != 0) return c;
    return residue <=> rhs.residue;
  }
  bool operator==(const ClassCanonicalForm& rhs) const = default;
};

struct ClassCanonicalFormHash {
  std::size_t operator()(const ClassCanonicalForm& f) const noexcept {
    return GroupElementHash{}(GroupElement{f.residue, f.coset});
  }
};

struct ReidemeisterCount {
  bool infinite = false;
  std::uint64_t value = 0;  // meaningful only when finite
};

struct PredictedDegrees {
  std::size_t lattice_rank = 0;
  std::vector<std::size_t> coset_ranks;
  std::size_t fr_degree = 0;
  std::size_t fq_degree = 0;
  std::size_t ball_degree = 0;
};

struct ClassSupport {
  std::vector<std::size_t> cosets;  // ascending
  std::size_t degree = 0;
};

class TwistedConjugacy {
 public:
  /// Validates both inputs; throws InvalidInputError on failure.
  TwistedConjugacy(VAGroupData group, Endomorphism endo);

  const VAGroupData& group() const noexcept { return group_; }
  const Endomorphism& endo() const noexcept { return endo_; }
  const std::vector<CosetLattice>& coset_lattices() const noexcept { return lattices_; }

  /// (0,c) g phi((0,c))^-1 for a coset representative c.
  GroupElement conjugate_by_rep(std::size_t c, const GroupElement& g) const;

  ClassCanonicalForm canonical_form(const GroupElement& g) const;
  bool are_twisted_conjugate(const GroupElement& g, const GroupElement& h) const;
  ClassSupport class_support_and_degree(const GroupElement& g) const;
  PredictedDegrees predicted_degrees() const;

  /// Infinite iff some B_a is rank deficient; otherwise counts the distinct
  /// canonical forms over all residues of every coset.
  ReidemeisterCount reidemeister_number(std::uint64_t budget = kDefaultEnumerationBudget) const;

 private:
  VAGroupData group_;
  Endomorphism endo_;
  std::vector<CosetLattice> lattices_;
  std::vector<GroupElement> rep_left_;   // (0,c)
  std::vector<GroupElement> rep_right_;  // phi((0,c))^-1
};

/// Classes of the induced endomorphism on G/(kZ)^n, labelled like
/// TwistedConjugacy but reducing modulo Image(B_a) + (kZ)^n.
class QuotientClasses {
 public:
  QuotientClasses(const TwistedConjugacy& engine, std::uint64_t k);

  std::uint64_t modulus() const noexcept { return k_; }
  ClassCanonicalForm canonical_form(const GroupElement& g) const;

  /// Number of residues of Z^n / (Image(B_a) + (kZ)^n).
  Integer coset_index(std::size_t coset) const;

  /// Distinct canonical forms over representatives of every coset.
  std::uint64_t count_classes(std::uint64_t budget = kDefaultEnumerationBudget) const;

 private:
  const TwistedConjugacy* engine_;
  std::uint64_t k_;
  std::vector<SNFDecomposition> augmented_;
};

std::uint64_t quotient_reidemeister(const TwistedConjugacy& engine, std::uint64_t k,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Independent route: union-find over all k^n * m elements of G/(kZ)^n,
/// joining each element with its twisted conjugates by the generators
/// (e_i, 1) and (0, c). Refuses more than `limit` elements.
std::uint64_t quotient_reidemeister_bruteforce(const VAGroupData& group, const Endomorphism& endo, std::uint64_t k,
                                               std::uint64_t limit = kDefaultEnumerationBudget);

/// Calls visit(x) for each x = P y with y_i in the residue window of d_i.
/// The decomposition must have full rank.
template <class Visit>
void for_each_window_residue(const SNFDecomposition& decomposition, Visit&& visit);

}  // namespace tcg

#include "tcg/detail/window_residues.hpp"
