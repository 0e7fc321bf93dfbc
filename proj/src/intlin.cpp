#include "tcg/intlin.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tcg/errors.hpp"

namespace tcg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, Integer(1)); }

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& k) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k;
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DimensionError("IntMatrix::apply: length mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("IntMatrix: product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("IntMatrix: difference shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("IntMatrix::column_block: out of range");
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw DimensionError("IntMatrix::hconcat: row count mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Working state for the Smith reduction. Every row operation on A is
// mirrored on P_inv and its inverse on P; column operations on Q.
struct SmithState {
  IntMatrix A, P, P_inv, Q;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
    for (std::size_t j = 0; j < P_inv.cols(); ++j) std::swap(P_inv(a, j), P_inv(b, j));
    for (std::size_t i = 0; i < P.rows(); ++i) std::swap(P(i, a), P(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A(i, a), A(i, b));
    for (std::size_t i = 0; i < Q.rows(); ++i) std::swap(Q(i, a), Q(i, b));
  }

  // row[target] += q * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(target, j) += q * A(source, j);
    for (std::size_t j = 0; j < P_inv.cols(); ++j) P_inv(target, j) += q * P_inv(source, j);
    for (std::size_t i = 0; i < P.rows(); ++i) P(i, source) -= q * P(i, target);
  }

  // col[target] += q * col[source]
  void add_col(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < A.rows(); ++i) A(i, target) += q * A(i, source);
    for (std::size_t i = 0; i < Q.rows(); ++i) Q(i, target) += q * Q(i, source);
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = -A(r, j);
    for (std::size_t j = 0; j < P_inv.cols(); ++j) P_inv(r, j) = -P_inv(r, j);
    for (std::size_t i = 0; i < P.rows(); ++i) P(i, r) = -P(i, r);
  }
};

}  // namespace

SNFDecomposition snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols)};
  std::vector<Integer> diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool exhausted = false;
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in
      // row-major order on ties.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& v = s.A(i, j);
          if (v == 0) continue;
          if (pi == rows || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
            best = abs(v);
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.A(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s.A(i, t).get_mpz_t(), s.A(t, t).get_mpz_t());
        if (q != 0) s.add_row(i, t, -q);
        if (s.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.A(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s.A(t, j).get_mpz_t(), s.A(t, t).get_mpz_t());
        if (q != 0) s.add_col(j, t, -q);
        if (s.A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block so that the
      // invariant factors form a divisibility chain.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s.A(i, j).get_mpz_t(), s.A(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      s.add_row(t, bad_row, Integer(1));
    }
    if (exhausted) break;
    if (s.A(t, t) < 0) s.negate_row(t);
    diag.push_back(s.A(t, t));
  }

  return SNFDecomposition{std::move(s.P), std::move(s.P_inv), std::move(s.Q), std::move(diag)};
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank(); }

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Lattice image_lattice(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t c = m.cols();
  IntMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t col = 0;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  auto add_col = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t i = 0; i < n; ++i) a(i, target) += q * a(i, source);
  };

  Integer q;
  for (std::size_t row = 0; row < n && col < c; ++row) {
    for (;;) {
      std::size_t best = c;
      for (std::size_t j = col; j < c; ++j) {
        if (a(row, j) == 0) continue;
        if (best == c || mpz_cmpabs(a(row, j).get_mpz_t(), a(row, best).get_mpz_t()) < 0) best = j;
      }
      if (best == c) break;
      swap_cols(col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < c; ++j) {
        if (a(row, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(row, j).get_mpz_t(), a(row, col).get_mpz_t());
        add_col(j, col, -q);
        if (a(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t i = 0; i < n; ++i) a(i, col) = -a(i, col);
    for (std::size_t j = 0; j < col; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), a(row, j).get_mpz_t(), a(row, col).get_mpz_t());
      if (q != 0) add_col(j, col, -q);
    }
    pivots.push_back(row);
    ++col;
  }

  return Lattice{n, a.column_block(0, col), std::move(pivots)};
}

bool member(const Lattice& lattice, std::span<const Integer> x) {
  if (x.size() != lattice.ambient_rank) throw DimensionError("member: vector length does not match lattice");
  IntVector r(x.begin(), x.end());
  const std::size_t n = lattice.ambient_rank;
  std::size_t next_row = 0;
  Integer q;
  for (std::size_t j = 0; j < lattice.rank(); ++j) {
    const std::size_t p = lattice.pivot_rows[j];
    for (; next_row < p; ++next_row)
      if (r[next_row] != 0) return false;
    const Integer& pivot = lattice.basis(p, j);
    if (!mpz_divisible_p(r[p].get_mpz_t(), pivot.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), r[p].get_mpz_t(), pivot.get_mpz_t());
    for (std::size_t i = p; i < n; ++i) r[i] -= q * lattice.basis(i, j);
    next_row = p + 1;
  }
  for (; next_row < n; ++next_row)
    if (r[next_row] != 0) return false;
  return true;
}

std::pair<Integer, Integer> residue_window(const Integer& d) {
  Integer hi, lo, neg = -d;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), d.get_mpz_t(), 1);
  mpz_fdiv_q_2exp(lo.get_mpz_t(), neg.get_mpz_t(), 1);
  return {lo + 1, hi};
}

IntVector minimal_rep(const SNFDecomposition& decomposition, std::span<const Integer> x) {
  if (x.size() != decomposition.ambient_rank()) throw DimensionError("minimal_rep: vector length mismatch");
  IntVector coords = decomposition.P_inv.apply(x);
  Integer half;
  for (std::size_t i = 0; i < decomposition.rank(); ++i) {
    const Integer& d = decomposition.diag[i];
    mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), d.get_mpz_t());
    mpz_fdiv_q_2exp(half.get_mpz_t(), d.get_mpz_t(), 1);
    if (coords[i] > half) coords[i] -= d;
  }
  return decomposition.P.apply(coords);
}

Integer index_mod_k(const Lattice& lattice, const Integer& k) {
  if (k <= 0) throw std::invalid_argument("index_mod_k: k must be positive");
  const std::size_t n = lattice.ambient_rank;
  const auto decomposition = snf(lattice.basis.hconcat(IntMatrix::scalar(n, k)));
  Integer index = 1;
  for (const auto& d : decomposition.diag) index *= d;
  return index;
}

Isolator isolator(const Lattice& lattice) {
  const auto decomposition = snf(lattice.basis);
  Integer index = 1;
  for (const auto& d : decomposition.diag) index *= d;
  // H = span{d_i p_i}; its saturation is span{p_i} over the same i.
  return Isolator{image_lattice(decomposition.P.column_block(0, decomposition.rank())), index};
}

IntVector to_int_vector(std::span<const std::int64_t> x) {
  IntVector out;
  out.reserve(x.size());
  for (std::int64_t v : x) out.emplace_back(static_cast<long>(v));
  return out;
}

std::vector<std::int64_t> to_int64_vector(std::span<const Integer> x) {
  std::vector<std::int64_t> out;
  out.reserve(x.size());
  for (const auto& v : x) {
    if (!v.fits_slong_p()) throw OverflowError("coordinate does not fit in 64 bits: " + v.get_str());
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace tcg
