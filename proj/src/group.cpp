#include "tcg/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcg/errors.hpp"

namespace tcg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("int64 overflow in lattice coordinate addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("int64 overflow in lattice coordinate product");
  return out;
}

Vec add(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

Vec negate(std::span<const std::int64_t> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(a[i], -1);
  return out;
}

SquareMatrix::SquareMatrix(std::size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw DimensionError("SquareMatrix: entry count is not n*n");
}

SquareMatrix SquareMatrix::identity(std::size_t n) { return scalar(n, 1); }

SquareMatrix SquareMatrix::scalar(std::size_t n, std::int64_t k) {
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = k;
  return SquareMatrix(n, std::move(e));
}

Vec SquareMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != n_) throw DimensionError("SquareMatrix::apply: length mismatch");
  Vec out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const std::int64_t a = entries_[i * n_ + j];
      if (a != 0 && x[j] != 0) acc = checked_add(acc, checked_mul(a, x[j]));
    }
    out[i] = acc;
  }
  return out;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (n_ != rhs.n_) throw DimensionError("SquareMatrix: product size mismatch");
  std::vector<std::int64_t> e(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t j = 0; j < n_; ++j)
        e[i * n_ + j] = checked_add(e[i * n_ + j], checked_mul(entries_[i * n_ + k], rhs.entries_[k * n_ + j]));
  return SquareMatrix(n_, std::move(e));
}

IntMatrix SquareMatrix::to_int_matrix() const {
  IntMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<long>(entries_[i * n_ + j]);
  return out;
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = g.coset * 0x9E3779B97F4A7C15ull;
  for (std::int64_t v : g.vector) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

void check_element(const VAGroupData& group, const GroupElement& g) {
  if (g.vector.size() != group.n) throw DimensionError("group element has wrong lattice rank");
  if (g.coset >= group.m()) throw DimensionError("group element coset index out of range");
}

GroupElement identity_element(const VAGroupData& group) { return GroupElement{Vec(group.n, 0), 0}; }

GroupElement coset_element(const VAGroupData& group, std::size_t coset) {
  if (coset >= group.m()) throw DimensionError("coset index out of range");
  return GroupElement{Vec(group.n, 0), coset};
}

GroupElement lattice_element(const VAGroupData& group, Vec vector) {
  if (vector.size() != group.n) throw DimensionError("lattice vector has wrong length");
  return GroupElement{std::move(vector), 0};
}

bool is_identity(const GroupElement& g) {
  return g.coset == 0 && std::all_of(g.vector.begin(), g.vector.end(), [](std::int64_t v) { return v == 0; });
}

GroupElement multiply(const VAGroupData& group, const GroupElement& g, const GroupElement& h) {
  check_element(group, g);
  check_element(group, h);
  // (x,a)(y,b) = (x + M_a y + t(a,b), ab)
  Vec v = add(add(g.vector, group.action[g.coset].apply(h.vector)), group.cocycle[g.coset][h.coset]);
  return GroupElement{std::move(v), group.mult[g.coset][h.coset]};
}

std::size_t inverse_coset(const VAGroupData& group, std::size_t coset) {
  for (std::size_t b = 0; b < group.m(); ++b)
    if (group.mult[coset][b] == 0) return b;
  throw InvalidInputError("coset has no inverse in the multiplication table");
}

GroupElement inverse(const VAGroupData& group, const GroupElement& g) {
  check_element(group, g);
  const std::size_t b = inverse_coset(group, g.coset);
  // M_a^-1 = M_b, so y = -M_b (x + t(a,b)).
  Vec y = negate(group.action[b].apply(add(g.vector, group.cocycle[g.coset][b])));
  return GroupElement{std::move(y), b};
}

namespace {

class ReportBuilder {
 public:
  static constexpr std::size_t kMaxFailures = 64;

  bool full() const { return report_.failures.size() >= kMaxFailures; }

  void fail(std::string identity, std::vector<std::size_t> indices, std::string message) {
    if (!full()) report_.failures.push_back({std::move(identity), std::move(indices), std::move(message)});
  }

  ValidationReport take() { return std::move(report_); }

 private:
  ValidationReport report_;
};

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::string format_indices(const VAGroupData& g, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (std::size_t i : idx) {
    os << (first ? "" : ",") << (i < g.m() ? g.cosets[i] : std::to_string(i));
    first = false;
  }
  os << ')';
  return os.str();
}

bool check_shapes(const VAGroupData& g, ReportBuilder& out) {
  const std::size_t m = g.m();
  if (m == 0) {
    out.fail("shape", {}, "coset list is empty");
    return false;
  }
  bool ok = true;
  if (g.mult.size() != m) {
    out.fail("shape", {}, "mult must have one row per coset");
    ok = false;
  }
  if (g.cocycle.size() != m) {
    out.fail("shape", {}, "cocycle must have one row per coset");
    ok = false;
  }
  if (g.action.size() != m) {
    out.fail("shape", {}, "action must have one matrix per coset");
    ok = false;
  }
  if (!ok) return false;
  for (std::size_t a = 0; a < m; ++a) {
    if (g.mult[a].size() != m) {
      out.fail("shape", {a}, "mult row has wrong length");
      ok = false;
      continue;
    }
    for (std::size_t b = 0; b < m; ++b)
      if (g.mult[a][b] >= m) {
        out.fail("shape", {a, b}, "mult entry out of range at " + format_indices(g, {a, b}));
        ok = false;
      }
    if (g.cocycle[a].size() != m) {
      out.fail("shape", {a}, "cocycle row has wrong length");
      ok = false;
      continue;
    }
    for (std::size_t b = 0; b < m; ++b)
      if (g.cocycle[a][b].size() != g.n) {
        out.fail("shape", {a, b}, "cocycle vector has wrong length at " + format_indices(g, {a, b}));
        ok = false;
      }
    if (g.action[a].size() != g.n) {
      out.fail("shape", {a}, "action matrix has wrong size for coset " + g.cosets[a]);
      ok = false;
    }
  }
  return ok;
}

}  // namespace

ValidationReport validate_group(const VAGroupData& g) {
  ReportBuilder out;
  if (!check_shapes(g, out)) return out.take();
  const std::size_t m = g.m();

  try {
    if (!(g.action[0] == SquareMatrix::identity(g.n))) out.fail("identity-action", {0}, "M of the identity coset is not the identity matrix");
    for (std::size_t a = 0; a < m; ++a) {
      if (g.mult[0][a] != a || g.mult[a][0] != a)
        out.fail("identity-row", {a}, "identity coset does not act trivially in mult at " + format_indices(g, {a}));
      if (!is_zero(g.cocycle[0][a]) || !is_zero(g.cocycle[a][0]))
        out.fail("identity-cocycle", {a}, "cocycle with the identity coset is nonzero at " + format_indices(g, {a}));
    }

    // Each row and column of mult must be a permutation.
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<bool> row_seen(m, false), col_seen(m, false);
      for (std::size_t b = 0; b < m; ++b) {
        row_seen[g.mult[a][b]] = true;
        col_seen[g.mult[b][a]] = true;
      }
      if (std::find(row_seen.begin(), row_seen.end(), false) != row_seen.end())
        out.fail("latin-row", {a}, "mult row of " + g.cosets[a] + " is not a permutation");
      if (std::find(col_seen.begin(), col_seen.end(), false) != col_seen.end())
        out.fail("latin-column", {a}, "mult column of " + g.cosets[a] + " is not a permutation");
    }

    for (std::size_t a = 0; a < m && !out.full(); ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
            out.fail("associativity", {a, b, c}, "mult is not associative at " + format_indices(g, {a, b, c}));

    for (std::size_t a = 0; a < m; ++a) {
      const Integer det = determinant(g.action[a].to_int_matrix());
      if (abs(det) != 1)
        out.fail("unimodular", {a}, "action matrix of " + g.cosets[a] + " has determinant " + det.get_str());
    }

    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!(g.action[a] * g.action[b] == g.action[g.mult[a][b]]))
          out.fail("action-compatibility", {a, b}, "M_a M_b != M_ab at " + format_indices(g, {a, b}));

    // t(a,b) + t(ab,c) = M_a t(b,c) + t(a,bc)
    for (std::size_t a = 0; a < m && !out.full(); ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          const std::size_t ab = g.mult[a][b];
          const std::size_t bc = g.mult[b][c];
          const Vec lhs = add(g.cocycle[a][b], g.cocycle[ab][c]);
          const Vec rhs = add(g.action[a].apply(g.cocycle[b][c]), g.cocycle[a][bc]);
          if (lhs != rhs)
            out.fail("cocycle", {a, b, c}, "cocycle condition fails at " + format_indices(g, {a, b, c}));
        }
  } catch (const OverflowError& e) {
    out.fail("overflow", {}, e.what());
  }
  return out.take();
}

ValidationReport validate_endo(const VAGroupData& g, const Endomorphism& endo) {
  ReportBuilder out;
  if (endo.matrix.size() != g.n) {
    out.fail("shape", {}, "endomorphism matrix must be n x n");
    return out.take();
  }
  if (endo.rep_image.size() != g.m()) {
    out.fail("shape", {}, "rep_image must have one entry per coset");
    return out.take();
  }
  bool shapes_ok = true;
  for (std::size_t a = 0; a < g.m(); ++a) {
    const auto& img = endo.rep_image[a];
    if (img.vector.size() != g.n || img.coset >= g.m()) {
      out.fail("shape", {a}, "rep_image entry for " + g.cosets[a] + " is malformed");
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out.take();

  try {
    if (!is_identity(endo.rep_image[0])) out.fail("identity-image", {0}, "phi(1_G) must be the identity element");

    // Phi M_a = M_abar Phi
    for (std::size_t a = 0; a < g.m(); ++a) {
      const std::size_t abar = endo.rep_image[a].coset;
      if (!(endo.matrix * g.action[a] == g.action[abar] * endo.matrix))
        out.fail("intertwining", {a}, "Phi M_a != M_phi(a) Phi for a = " + g.cosets[a]);
    }

    // phi(a) phi(b) = phi(a*b), where a*b = (t(a,b), ab)
    for (std::size_t a = 0; a < g.m(); ++a)
      for (std::size_t b = 0; b < g.m(); ++b) {
        const GroupElement lhs = multiply(g, endo.rep_image[a], endo.rep_image[b]);
        const std::size_t ab = g.mult[a][b];
        const GroupElement rhs{add(endo.matrix.apply(g.cocycle[a][b]), endo.rep_image[ab].vector),
                               endo.rep_image[ab].coset};
        if (lhs != rhs)
          out.fail("multiplicativity", {a, b}, "phi(a)phi(b) != phi(ab) at " + format_indices(g, {a, b}));
      }
  } catch (const OverflowError& e) {
    out.fail("overflow", {}, e.what());
  }
  return out.take();
}

namespace {
[[noreturn]] void throw_first(const ValidationReport& report, const char* what) {
  const auto& f = report.failures.front();
  throw InvalidInputError(std::string(what) + " invalid: " + f.identity + ": " + f.message);
}
}  // namespace

void require_valid(const VAGroupData& group) {
  if (auto r = validate_group(group); !r.ok()) throw_first(r, "group");
}

void require_valid(const VAGroupData& group, const Endomorphism& endo) {
  require_valid(group);
  if (auto r = validate_endo(group, endo); !r.ok()) throw_first(r, "endomorphism");
}

GroupElement apply_endo(const VAGroupData& group, const Endomorphism& endo, const GroupElement& g) {
  check_element(group, g);
  // phi(x a) = (Phi x) phi(a) = (Phi x + u_a, abar)
  const auto& img = endo.rep_image[g.coset];
  return GroupElement{add(endo.matrix.apply(g.vector), img.vector), img.coset};
}

GroupElement twisted_conjugate(const VAGroupData& group, const Endomorphism& endo, const GroupElement& z,
                               const GroupElement& g) {
  return multiply(group, multiply(group, z, g), inverse(group, apply_endo(group, endo, z)));
}

TwistData twist_data(const VAGroupData& group, const Endomorphism& endo, std::size_t a) {
  if (a >= group.m()) throw DimensionError("twist_data: coset index out of range");
  TwistData data;
  data.coset = a;
  data.twisted_matrix = IntMatrix::identity(group.n) - (group.action[a] * endo.matrix).to_int_matrix();

  const GroupElement a_elem = coset_element(group, a);
  const GroupElement a_inv = inverse(group, a_elem);
  for (std::size_t b = 0; b < group.m(); ++b) {
    const GroupElement b_elem = coset_element(group, b);
    const GroupElement conj = twisted_conjugate(group, endo, b_elem, a_elem);
    if (conj.coset != a) continue;
    // phi^a(b) = phi(b) a^-1 b^-1 a
    GroupElement commutator = multiply(
        group, multiply(group, multiply(group, apply_endo(group, endo, b_elem), a_inv), inverse(group, b_elem)),
        a_elem);
    if (commutator.coset != 0)
      throw std::logic_error("twist_data: twisted commutator left the lattice for a coset in E_a");
    data.stabilizer.push_back(b);
    data.shifts.push_back(group.action[a].apply(commutator.vector));
  }
  return data;
}

}  // namespace tcg
