#include <doctest.h>

#include <vector>

#include "schrodinger/linalg.hpp"
#include "support/test_support.hpp"

using namespace schrodinger;
using linalg::Matrix;

namespace {

// Textbook Gaussian elimination over the rationals, used as the oracle for
// the fraction-free routines.
std::size_t naive_rank(Matrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(piv, k));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) / a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(testing_support::Rng& rng, std::size_t rows, std::size_t cols, bool sparse) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (sparse && rng.uniform(0, 2) != 0) continue;
      m(r, c) = rng.rational(6, 5);
    }
  }
  return m;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank and nullspace agree with naive elimination") {
  testing_support::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix a = random_matrix(rng, rows, cols, rng.coin());
    const std::size_t r = naive_rank(a);
    CHECK(linalg::rank(a) == r);
    const auto kernel = linalg::nullspace(a);
    REQUIRE(kernel.size() == cols - r);
    for (const auto& v : kernel) {
      CHECK(is_zero_vector(a.apply(v)));
      CHECK_FALSE(is_zero_vector(v));
      for (const Scalar& s : v) CHECK(s.is_integer());
    }
    Matrix k(cols, kernel.size());
    for (std::size_t c = 0; c < kernel.size(); ++c) {
      for (std::size_t row = 0; row < cols; ++row) k(row, c) = kernel[c][row];
    }
    if (!kernel.empty()) CHECK(naive_rank(k) == kernel.size());
  }
}

TEST_CASE("inverse and solve_unique") {
  testing_support::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix a = random_matrix(rng, n, n, false);
    const auto inv = linalg::inverse(a);
    CHECK(inv.has_value() == (naive_rank(a) == n));
    if (!inv) continue;
    CHECK(a * *inv == Matrix::identity(n));
    std::vector<Scalar> b(n);
    for (auto& s : b) s = rng.rational(9, 4);
    const auto x = linalg::solve_unique(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("singular and underdetermined systems have no unique solution") {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_FALSE(linalg::inverse(a).has_value());
  CHECK_FALSE(linalg::solve_unique(a, {Scalar(1), Scalar(2)}).has_value());
  Matrix wide(1, 2);
  wide(0, 0) = 1;
  CHECK_FALSE(linalg::solve_unique(wide, {Scalar(1)}).has_value());
}

TEST_CASE("nullspace vectors are primitive with positive leading entry") {
  Matrix a(1, 3);
  a(0, 0) = Scalar(1, 2);
  a(0, 1) = Scalar(1, 3);
  a(0, 2) = Scalar(-1);
  const auto kernel = linalg::nullspace(a);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    REQUIRE(lead != v.end());
    CHECK(lead->sign() > 0);
  }
}

TEST_CASE("span tracks rank incrementally") {
  linalg::Span s(3);
  CHECK(s.insert({Scalar(1), Scalar(2), Scalar(0)}));
  CHECK_FALSE(s.insert({Scalar(-2), Scalar(-4), Scalar(0)}));
  CHECK(s.insert({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK(s.contains({Scalar(1), Scalar(3), Scalar(1)}));
  CHECK_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  CHECK_FALSE(s.insert({Scalar(0), Scalar(0), Scalar(0)}));
  CHECK(s.rank() == 2);
}
