#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
mpz_class determinant(IntMatrix m);

/// Determinant reduced into [0, prime). `prime` must be below 2^62.
std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t prime);

/// Result of a fraction-free solve: A * scaled = det * b.
/// When det is zero nothing is said about `scaled` (it is empty).
struct ScaledSolution {
  mpz_class det;
  std::vector<mpz_class> scaled;
};

/// Solves A x = b over the rationals without fractions: returns det(A) and
/// the integer vector det(A) * x (Cramer numerators).
ScaledSolution solve_scaled(IntMatrix a, const std::vector<mpz_class>& b);

}  // namespace zg
