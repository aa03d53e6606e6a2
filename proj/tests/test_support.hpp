#pragma once

// Shared catalog and independent oracles for the test suites. Nothing here
// calls the library's elimination, subgroup or unit routines.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zg/group.hpp"
#include "zg/matrix.hpp"
#include "zg/ring.hpp"

namespace zg::testing {

struct NamedGroup {
  std::string spec;
  GroupPtr group;
};

/// Every group the criterion table mentions, in a fixed order.
inline std::vector<NamedGroup> catalog() {
  const auto q8 = quaternion8();
  return {
      {"C1", cyclic(1)},
      {"C2", cyclic(2)},
      {"C6", cyclic(6)},
      {"C8", cyclic(8)},
      {"C2xC2", direct_product(*cyclic(2), *cyclic(2))},
      {"Q8", q8},
      {"Q8xC2", direct_product(*q8, *cyclic(2))},
      {"Q8xE2^2", direct_product(*q8, *elementary_abelian2(2))},
      {"S3", symmetric3()},
      {"D4", dihedral(4)},
      {"D5", dihedral(5)},
      {"Q8xC3", direct_product(*q8, *cyclic(3))},
      {"Q8xC5", direct_product(*q8, *cyclic(5))},
  };
}

inline RingElement random_element(const GroupPtr& g, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<mpz_class> c(g->order());
  for (auto& v : c) v = dist(rng);
  return RingElement(g, std::move(c));
}

/// Determinant by Gaussian elimination over Q.
inline mpz_class rational_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  det.canonicalize();
  return det.get_num();
}

/// Product in ZG through the regular representation: R(w1) * coeffs(w2).
inline std::vector<mpz_class> matrix_route_product(const RingElement& w1, const RingElement& w2) {
  const IntMatrix r = regular_matrix(w1);
  std::vector<mpz_class> out(w1.group().order());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += r(i, j) * w2.coeffs()[j];
  return out;
}

/// All subgroups by testing every subset that contains the identity.
/// Exponential; only for groups of order <= 12.
inline std::vector<std::vector<Element>> brute_force_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> out;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<Element> set = {kIdentity};
    for (std::size_t i = 1; i < n; ++i)
      if (mask & (1U << (i - 1))) set.push_back(static_cast<Element>(i));
    bool closed = true;
    for (Element x : set)
      for (Element y : set)
        if (std::find(set.begin(), set.end(), g.mul(x, y)) == set.end()) closed = false;
    if (closed) out.push_back(set);
  }
  return out;
}

/// Coefficients of the Hoechsmann element on a generator of C_n, computed in
/// Z[t]/(t^n - 1) from exponent arithmetic alone.
inline std::vector<long long> hoechsmann_polynomial(long long n, long long i, long long j,
                                                    long long k) {
  std::vector<long long> c(static_cast<std::size_t>(n), 0);
  for (long long s = 0; s < i; ++s)
    for (long long t = 0; t < k; ++t) c[static_cast<std::size_t>((j * s + i * t) % n)] += 1;
  const long long scalar = (1 - i * k) / n;
  for (auto& v : c) v += scalar;
  return c;
}

/// y^-1 x y in <x>, by listing powers of x.
inline bool conjugate_in_cyclic(const FiniteGroup& g, Element x, Element y) {
  const Element c = g.mul(g.mul(g.inverse(y), x), y);
  Element p = kIdentity;
  do {
    if (p == c) return true;
    p = g.mul(p, x);
  } while (p != kIdentity);
  return false;
}

/// Ring element from (name, coefficient) pairs; looks names up as strings.
inline RingElement from_terms(const GroupPtr& g,
                              const std::vector<std::pair<std::string, long>>& terms) {
  RingElement w(g);
  for (const auto& [name, c] : terms) {
    const auto e = g->find(name);
    if (!e) throw std::invalid_argument("no element named " + name);
    w[*e] += c;
  }
  return w;
}

}  // namespace zg::testing
