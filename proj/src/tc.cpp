#include "tcg/tc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tcg/errors.hpp"

namespace tcg {

TwistedConjugacy::TwistedConjugacy(VAGroupData group, Endomorphism endo)
    : group_(std::move(group)), endo_(std::move(endo)) {
  require_valid(group_, endo_);
  const std::size_t n = group_.n;
  for (std::size_t a = 0; a < group_.m(); ++a) {
    CosetLattice lattice;
    lattice.coset = a;
    lattice.twisted = IntMatrix::identity(n) - (group_.action[a] * endo_.matrix).to_int_matrix();
    lattice.snf = snf(lattice.twisted);
    lattice.image = image_lattice(lattice.twisted);
    lattice.rank = lattice.snf.rank();
    lattices_.push_back(std::move(lattice));

    GroupElement rep = coset_element(group_, a);
    rep_right_.push_back(inverse(group_, apply_endo(group_, endo_, rep)));
    rep_left_.push_back(std::move(rep));
  }
}

GroupElement TwistedConjugacy::conjugate_by_rep(std::size_t c, const GroupElement& g) const {
  return multiply(group_, multiply(group_, rep_left_[c], g), rep_right_[c]);
}

namespace {

// Every twisted conjugator (w,c) factors as (w,1)(0,c), and conjugating by
// (w,1) moves the vector part only inside its Image(B)-coset. The minimum
// over c of (coset, reduced residue) is therefore a class invariant.
template <class Reduce>
ClassCanonicalForm canonicalize(const TwistedConjugacy& engine, const GroupElement& g, Reduce&& reduce) {
  check_element(engine.group(), g);
  ClassCanonicalForm best;
  bool have = false;
  for (std::size_t c = 0; c < engine.group().m(); ++c) {
    const GroupElement moved = engine.conjugate_by_rep(c, g);
    ClassCanonicalForm candidate{moved.coset, reduce(moved.coset, moved.vector)};
    if (!have || candidate < best) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

}  // namespace

ClassCanonicalForm TwistedConjugacy::canonical_form(const GroupElement& g) const {
  return canonicalize(*this, g, [this](std::size_t coset, const Vec& x) {
    return to_int64_vector(minimal_rep(lattices_[coset].snf, to_int_vector(x)));
  });
}

bool TwistedConjugacy::are_twisted_conjugate(const GroupElement& g, const GroupElement& h) const {
  return canonical_form(g) == canonical_form(h);
}

ClassSupport TwistedConjugacy::class_support_and_degree(const GroupElement& g) const {
  check_element(group_, g);
  std::set<std::size_t> support;
  for (std::size_t c = 0; c < group_.m(); ++c) support.insert(conjugate_by_rep(c, g).coset);
  ClassSupport out;
  out.cosets.assign(support.begin(), support.end());
  for (std::size_t a : out.cosets) out.degree = std::max(out.degree, lattices_[a].rank);
  return out;
}

PredictedDegrees TwistedConjugacy::predicted_degrees() const {
  PredictedDegrees out;
  out.lattice_rank = group_.n;
  std::size_t min_rank = group_.n;
  for (const auto& l : lattices_) {
    out.coset_ranks.push_back(l.rank);
    min_rank = std::min(min_rank, l.rank);
  }
  out.fr_degree = group_.n - min_rank;
  out.fq_degree = out.fr_degree;
  out.ball_degree = group_.n;
  return out;
}

namespace {

std::uint64_t checked_total(const Integer& total, std::uint64_t budget, const char* what) {
  if (total > Integer(static_cast<unsigned long>(budget)))
    throw ResourceLimitError(std::string(what) + ": " + total.get_str() + " residues exceed the budget of " +
                             std::to_string(budget));
  return total.get_ui();
}

}  // namespace

ReidemeisterCount TwistedConjugacy::reidemeister_number(std::uint64_t budget) const {
  for (const auto& l : lattices_)
    if (l.rank < group_.n) return ReidemeisterCount{true, 0};

  Integer total = 0;
  for (const auto& l : lattices_) {
    Integer index = 1;
    for (const auto& d : l.snf.diag) index *= d;
    total += index;
  }
  checked_total(total, budget, "reidemeister_number");

  std::unordered_set<ClassCanonicalForm, ClassCanonicalFormHash> forms;
  for (const auto& l : lattices_) {
    for_each_window_residue(l.snf, [&](const IntVector& x) {
      forms.insert(canonical_form(GroupElement{to_int64_vector(x), l.coset}));
    });
  }
  return ReidemeisterCount{false, forms.size()};
}

QuotientClasses::QuotientClasses(const TwistedConjugacy& engine, std::uint64_t k) : engine_(&engine), k_(k) {
  if (k == 0) throw std::invalid_argument("quotient modulus k must be positive");
  const std::size_t n = engine.group().n;
  const Integer kk(static_cast<unsigned long>(k));
  for (const auto& l : engine.coset_lattices())
    augmented_.push_back(snf(l.twisted.hconcat(IntMatrix::scalar(n, kk))));
}

ClassCanonicalForm QuotientClasses::canonical_form(const GroupElement& g) const {
  return canonicalize(*engine_, g, [this](std::size_t coset, const Vec& x) {
    return to_int64_vector(minimal_rep(augmented_[coset], to_int_vector(x)));
  });
}

Integer QuotientClasses::coset_index(std::size_t coset) const {
  Integer index = 1;
  for (const auto& d : augmented_.at(coset).diag) index *= d;
  return index;
}

std::uint64_t QuotientClasses::count_classes(std::uint64_t budget) const {
  Integer total = 0;
  for (std::size_t a = 0; a < augmented_.size(); ++a) total += coset_index(a);
  checked_total(total, budget, "quotient_reidemeister");

  std::unordered_set<ClassCanonicalForm, ClassCanonicalFormHash> forms;
  for (std::size_t a = 0; a < augmented_.size(); ++a) {
    for_each_window_residue(augmented_[a], [&](const IntVector& x) {
      forms.insert(canonical_form(GroupElement{to_int64_vector(x), a}));
    });
  }
  return forms.size();
}

std::uint64_t quotient_reidemeister(const TwistedConjugacy& engine, std::uint64_t k, std::uint64_t budget) {
  return QuotientClasses(engine, k).count_classes(budget);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size), rank_(size, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

}  // namespace

std::uint64_t quotient_reidemeister_bruteforce(const VAGroupData& group, const Endomorphism& endo, std::uint64_t k,
                                               std::uint64_t limit) {
  if (k == 0) throw std::invalid_argument("quotient modulus k must be positive");
  require_valid(group, endo);
  const std::size_t n = group.n;
  const std::size_t m = group.m();

  Integer size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= static_cast<unsigned long>(k);
  size *= static_cast<unsigned long>(m);
  if (size > Integer(static_cast<unsigned long>(limit)))
    throw ResourceLimitError("quotient brute force: " + size.get_str() + " elements exceed the limit of " +
                             std::to_string(limit));
  const std::size_t lattice_size = size.get_ui() / m;
  const auto kk = static_cast<std::int64_t>(k);

  auto encode = [&](const GroupElement& g) {
    std::size_t idx = 0;
    for (std::size_t i = n; i-- > 0;) {
      std::int64_t r = g.vector[i] % kk;
      if (r < 0) r += kk;
      idx = idx * k + static_cast<std::size_t>(r);
    }
    return g.coset * lattice_size + idx;
  };
  auto decode = [&](std::size_t idx) {
    GroupElement g{Vec(n, 0), idx / lattice_size};
    std::size_t rest = idx % lattice_size;
    for (std::size_t i = 0; i < n; ++i) {
      g.vector[i] = static_cast<std::int64_t>(rest % k);
      rest /= k;
    }
    return g;
  };

  struct Generator {
    GroupElement left, right;
  };
  std::vector<Generator> generators;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    GroupElement z = lattice_element(group, std::move(e));
    generators.push_back({z, inverse(group, apply_endo(group, endo, z))});
  }
  for (std::size_t c = 1; c < m; ++c) {
    GroupElement z = coset_element(group, c);
    generators.push_back({z, inverse(group, apply_endo(group, endo, z))});
  }

  const std::size_t total = lattice_size * m;
  DisjointSets sets(total);
  std::size_t classes = total;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const GroupElement g = decode(idx);
    for (const auto& gen : generators) {
      const GroupElement h = multiply(group, multiply(group, gen.left, g), gen.right);
      if (sets.unite(idx, encode(h))) --classes;
    }
  }
  return classes;
}

}  // namespace tcg
