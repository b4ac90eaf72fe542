#include "schrodinger/linalg.hpp"

#include <stdexcept>

namespace schrodinger::linalg {

namespace {

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

// Copies [a | extra] and scales each row by the lcm of its denominators.
IntMatrix integer_rows(const Matrix& a, const Matrix* extra) {
  const std::size_t ecols = extra ? extra->cols() : 0;
  IntMatrix m(a.rows(), a.cols() + ecols);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < ecols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*extra)(r, c).raw().get_den_mpz_t());
    }
    auto scaled = [&](const Scalar& s) { return mpz_class(s.numerator() * (l / s.denominator())); };
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = scaled(a(r, c));
    for (std::size_t c = 0; c < ecols; ++c) m(r, a.cols() + c) = scaled((*extra)(r, c));
  }
  return m;
}

struct Reduction {
  std::vector<std::size_t> pivot_cols;
  mpz_class pivot = 1;  // common value of every pivot entry after reduction
};

// Fraction-free Gauss-Jordan elimination. Pivots are searched only among the
// first pivot_limit columns. Afterwards row r < rank has value `pivot` in
// column pivot_cols[r] and zero in every other pivot column.
Reduction reduce(IntMatrix& m, std::size_t pivot_limit) {
  Reduction red;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t k = 0; k < pivot_limit && r < m.rows(); ++k) {
    std::size_t p = r;
    while (p < m.rows() && m(p, k) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.swap_rows(p, r);
    const mpz_class piv = m(r, k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const mpz_class factor = m(i, k);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_class t = piv * m(i, j) - factor * m(r, j);
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("fraction-free elimination produced an inexact division");
        }
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    // Rows above r were scaled by piv/prev along with everything else, so
    // their pivot entries now equal piv as well.
    red.pivot_cols.push_back(k);
    prev = piv;
    ++r;
  }
  red.pivot = prev;
  return red;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

std::size_t rank(const Matrix& a) {
  IntMatrix m = integer_rows(a, nullptr);
  return reduce(m, a.cols()).pivot_cols.size();
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
  IntMatrix m = integer_rows(a, nullptr);
  const Reduction red = reduce(m, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpz_class> v(a.cols(), 0);
    v[free] = red.pivot;
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) v[red.pivot_cols[r]] = -m(r, free);

    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : v) {
      if (x != 0) {
        if (x < 0) g = -g;
        break;
      }
    }
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(mpq_class(mpz_class(x / g)));
    basis.push_back(std::move(out));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve_unique(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve_unique");
  Matrix rhs(b.size(), 1);
  for (std::size_t r = 0; r < b.size(); ++r) rhs(r, 0) = b[r];
  IntMatrix m = integer_rows(a, &rhs);
  const Reduction red = reduce(m, a.cols());
  const std::size_t rk = red.pivot_cols.size();
  if (rk < a.cols()) return std::nullopt;
  for (std::size_t r = rk; r < a.rows(); ++r) {
    if (m(r, a.cols()) != 0) return std::nullopt;
  }
  std::vector<Scalar> x(a.cols());
  for (std::size_t r = 0; r < rk; ++r) x[red.pivot_cols[r]] = Scalar(m(r, a.cols()), red.pivot);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(n);
  IntMatrix m = integer_rows(a, &id);
  const Reduction red = reduce(m, n);
  if (red.pivot_cols.size() < n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(red.pivot_cols[r], c) = Scalar(m(r, n + c), red.pivot);
  }
  return inv;
}

std::vector<Scalar> Span::reduce(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch in Span");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar coef = v[pivots_[k]];
    if (coef.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!basis_[k][c].is_zero()) v[c] -= coef * basis_[k][c];
    }
  }
  return v;
}

bool Span::contains(const std::vector<Scalar>& v) const {
  for (const Scalar& s : reduce(v)) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Span::insert(const std::vector<Scalar>& v) {
  std::vector<Scalar> r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && r[piv].is_zero()) ++piv;
  if (piv == dim_) return false;
  const Scalar lead = r[piv];
  for (Scalar& s : r) s /= lead;
  // Keep existing rows reduced with respect to the new pivot.
  for (auto& row : basis_) {
    const Scalar coef = row[piv];
    if (coef.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!r[c].is_zero()) row[c] -= coef * r[c];
    }
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace schrodinger::linalg
