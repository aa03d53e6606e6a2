#include "zg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace zg {

namespace {

void require_square(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
}

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r1, c), m(r2, c));
}

// In-place Bareiss forward elimination over the first `n` columns of `m`.
// Afterwards m(n-1, n-1) holds the determinant of the leading n x n block up
// to `sign`; returns false if that block is singular.
bool bareiss_forward(IntMatrix& m, std::size_t n, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return false;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        t = m(i, j) * m(k, k);
        t -= m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return true;
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (; e != 0; e >>= 1U) {
    if (e & 1U) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
  }
  return r;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix dimensions do not agree");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    }
  return out;
}

mpz_class determinant(IntMatrix m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  if (!bareiss_forward(m, n, sign)) return 0;
  return sign * m(n - 1, n - 1);
}

std::uint64_t determinant_mod(const IntMatrix& m, std::uint64_t prime) {
  require_square(m);
  const std::size_t n = m.rows();
  std::vector<std::uint64_t> a(n * n);
  mpz_class r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), prime);
      a[i * n + j] = r.get_ui();
    }

  std::uint64_t det = 1 % prime;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = (prime - det) % prime;
    }
    det = mulmod(det, a[k * n + k], prime);
    const std::uint64_t inv = powmod(a[k * n + k], prime - 2, prime);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t f = mulmod(a[i * n + k], inv, prime);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j)
        a[i * n + j] = (a[i * n + j] + prime - mulmod(f, a[k * n + j], prime)) % prime;
    }
  }
  return det;
}

ScaledSolution solve_scaled(IntMatrix a, const std::vector<mpz_class>& b) {
  require_square(a);
  const std::size_t n = a.rows();
  if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  if (n == 0) return {1, {}};

  IntMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = std::move(a(i, j));
    aug(i, n) = b[i];
  }

  int sign = 1;
  if (!bareiss_forward(aug, n, sign)) return {0, {}};
  // The trailing pivot is det up to the row-swap sign; rows were swapped
  // together with b, so back substitution against it gives pivot * x.
  const mpz_class pivot = aug(n - 1, n - 1);

  std::vector<mpz_class> scaled(n);
  mpz_class acc;
  for (std::size_t ii = n; ii-- > 0;) {
    acc = pivot * aug(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * scaled[j];
    mpz_divexact(scaled[ii].get_mpz_t(), acc.get_mpz_t(), aug(ii, ii).get_mpz_t());
  }
  if (sign < 0)
    for (auto& v : scaled) v = -v;
  return {sign * pivot, std::move(scaled)};
}

}  // namespace zg
