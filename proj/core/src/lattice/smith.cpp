#include "endosign/lattice/smith.hpp"

#include <utility>

namespace endosign {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Working state of the elimination. D is reduced in place; the four
// transformation matrices are updated so that U * D * V and
// U_inv * A * V_inv = D hold after every step.
class SmithWorker {
 public:
  explicit SmithWorker(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    const std::size_t steps = std::min(m, n);
    std::size_t rank = 0;
    for (std::size_t s = 0; s < steps; ++s) {
      if (!reduce_block(s)) break;
      if (d_(s, s) < 0) negate_row(s);
      ++rank;
    }
    return SmithDecomposition{std::move(u_), std::move(d_), std::move(v_), std::move(u_inv_),
                              std::move(v_inv_), rank};
  }

 private:
  // Brings a pivot dividing the whole lower-right block to (s, s) and clears
  // its row and column. Returns false when the block is zero.
  bool reduce_block(std::size_t s) {
    const std::size_t m = d_.rows();
    const std::size_t n = d_.cols();
    for (;;) {
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = s; i < m; ++i) {
        for (std::size_t j = s; j < n; ++j) {
          if (d_(i, j) == 0) continue;
          Integer a = abs_value(d_(i, j));
          if (pi == m || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return false;
      if (pi != s) swap_rows(s, pi);
      if (pj != s) swap_cols(s, pj);

      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (d_(i, s) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(i, s).get_mpz_t(), d_(s, s).get_mpz_t());
        add_row(i, s, -q);
        if (d_(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (d_(s, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d_(s, j).get_mpz_t(), d_(s, s).get_mpz_t());
        add_col(j, s, -q);
        if (d_(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t i = s + 1; i < m && divides_all; ++i) {
        for (std::size_t j = s + 1; j < n; ++j) {
          if (!mpz_divisible_p(d_(i, j).get_mpz_t(), d_(s, s).get_mpz_t())) {
            add_row(s, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) return true;
    }
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(i, c), d_(j, c));
    for (std::size_t c = 0; c < u_inv_.cols(); ++c) std::swap(u_inv_(i, c), u_inv_(j, c));
    for (std::size_t r = 0; r < u_.rows(); ++r) std::swap(u_(r, i), u_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, i), d_(r, j));
    for (std::size_t r = 0; r < v_inv_.rows(); ++r) std::swap(v_inv_(r, i), v_inv_(r, j));
    for (std::size_t c = 0; c < v_.cols(); ++c) std::swap(v_(i, c), v_(j, c));
  }

  // row_target += c * row_source
  void add_row(std::size_t target, std::size_t source, const Integer& c) {
    for (std::size_t k = 0; k < d_.cols(); ++k) d_(target, k) += c * d_(source, k);
    for (std::size_t k = 0; k < u_inv_.cols(); ++k) u_inv_(target, k) += c * u_inv_(source, k);
    for (std::size_t r = 0; r < u_.rows(); ++r) u_(r, source) -= c * u_(r, target);
  }

  // col_target += c * col_source
  void add_col(std::size_t target, std::size_t source, const Integer& c) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, target) += c * d_(r, source);
    for (std::size_t r = 0; r < v_inv_.rows(); ++r) v_inv_(r, target) += c * v_inv_(r, source);
    for (std::size_t k = 0; k < v_.cols(); ++k) v_(source, k) -= c * v_(target, k);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) = -d_(i, c);
    for (std::size_t c = 0; c < u_inv_.cols(); ++c) u_inv_(i, c) = -u_inv_(i, c);
    for (std::size_t r = 0; r < u_.rows(); ++r) u_(r, i) = -u_(r, i);
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix u_inv_;
  IntMatrix v_;
  IntMatrix v_inv_;
};

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(D.rows(), D.cols());
  IntVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = D(i, i);
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithWorker(a).run(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  const auto snf = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = snf.rank; j < a.cols(); ++j) free_cols.push_back(j);
  // A V_inv = U D, whose columns beyond the rank vanish.
  return snf.V_inv.select_columns(free_cols);
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InputError("solve_rational: dimension mismatch");
  const auto snf = smith_normal_form(a);
  // D y = U_inv b with z = V_inv y.
  const RatVector rhs = snf.U_inv * b;
  RatVector y(a.cols(), Rational(0));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < snf.rank) {
      y[i] = rhs[i] / Rational(snf.D(i, i));
      y[i].canonicalize();
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V_inv * y;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: dimension mismatch");
  const auto snf = smith_normal_form(a);
  const IntVector rhs = snf.U_inv * b;
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i < snf.rank) {
      if (!mpz_divisible_p(rhs[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), rhs[i].get_mpz_t(), snf.D(i, i).get_mpz_t());
    } else if (rhs[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V_inv * y;
}

std::size_t rational_kernel_dimension(const IntMatrix& a) { return a.cols() - a.rank(); }

}  // namespace endosign
