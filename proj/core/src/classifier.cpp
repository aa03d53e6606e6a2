#include "zg/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "zg/errors.hpp"

namespace zg {

const char* to_string(CriterionBranch b) {
  switch (b) {
    case CriterionBranch::Abelian:
      return "abelian";
    case CriterionBranch::Hamiltonian2Group:
      return "hamiltonian-2-group";
    case CriterionBranch::NonNormalSubgroup:
      return "non-normal-subgroup";
    case CriterionBranch::HamiltonianOddTorsion:
      return "hamiltonian-with-odd-torsion";
  }
  return "unknown";
}

CriterionReport criterion(const FiniteGroup& group, std::string description) {
  CriterionReport r;
  r.group_description = std::move(description);
  r.flags = classify(group);
  r.prediction = r.flags.is_abelian || r.flags.is_hamiltonian_2group;
  if (r.flags.is_abelian)
    r.branch = CriterionBranch::Abelian;
  else if (r.flags.is_hamiltonian_2group)
    r.branch = CriterionBranch::Hamiltonian2Group;
  else if (!r.flags.all_subgroups_normal)
    r.branch = CriterionBranch::NonNormalSubgroup;
  else
    r.branch = CriterionBranch::HamiltonianOddTorsion;
  return r;
}

namespace {

SymmetricPairReport bicyclic_counterexample(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  for (Element x = 0; x < g.order(); ++x) {
    const Subgroup cx = cyclic_subgroup(g, x);
    for (Element y = 0; y < g.order(); ++y) {
      if (cx.contains(g.conjugate(x, y))) continue;
      const UnitCertificate u = bicyclic(group, x, y);
      auto [left, right] = symmetric_products(u);
      return make_verified_pair(std::move(left), std::move(right),
                                PairConstruction::BicyclicDerived, BicyclicPairParameters{x, y});
    }
  }
  throw VerificationFailure("no (x, y) with y^-1 x y outside <x> despite a non-normal subgroup");
}

SymmetricPairReport quaternion_counterexample(const GroupPtr& group, Element g) {
  const FiniteGroup& grp = *group;
  for (Element a = 0; a < grp.order(); ++a) {
    if (element_order(grp, a) != 4 || !grp.commute(a, g)) continue;
    for (Element b = 0; b < grp.order(); ++b) {
      if (element_order(grp, b) != 4 || !grp.commute(b, g)) continue;
      if (grp.power(a, 2) != grp.power(b, 2)) continue;
      if (grp.mul(grp.mul(b, a), grp.inverse(b)) != grp.inverse(a)) continue;
      return quaternion_pair(group, a, b, g);
    }
  }
  throw VerificationFailure("hamiltonian group without a Q8 copy centralizing the odd element");
}

}  // namespace

SymmetricPairReport find_counterexample(const GroupPtr& group) {
  const CriterionReport report = criterion(*group);
  if (report.prediction)
    throw PreconditionViolation("symmetric units already form a group; no counterexample exists");
  if (report.branch == CriterionBranch::NonNormalSubgroup) return bicyclic_counterexample(group);
  if (!report.flags.odd_prime_order_element)
    throw VerificationFailure("hamiltonian group reported without an odd-order witness");
  return quaternion_counterexample(group, *report.flags.odd_prime_order_element);
}

namespace {

// 2^61 - 1; det = ±1 implies det mod this prime is 1 or prime - 1.
constexpr std::uint64_t kFilterPrime = (std::uint64_t{1} << 61) - 1;

// Depth-first walk over the box, restricted to vectors whose first
// coordinate lies in [first_lo, first_hi] and whose coordinates sum to 1.
std::vector<UnitCertificate> search_slice(const GroupPtr& group, long long bound, long long first_lo,
                                          long long first_hi) {
  const std::size_t n = group->order();
  std::vector<UnitCertificate> found;
  std::vector<long> v(n);
  std::vector<long long> prefix(n + 1, 0);
  // Can coordinates from..n-1 still bring the running sum to 1?
  const auto feasible = [&](std::size_t from, long long partial) {
    const auto rest = static_cast<long long>(n - from);
    return partial + rest * bound >= 1 && partial - rest * bound <= 1;
  };

  std::vector<mpz_class> coeffs(n);
  std::size_t depth = 0;
  v[0] = static_cast<long>(first_lo - 1);
  while (true) {
    const long long hi = depth == 0 ? first_hi : bound;
    if (++v[depth] > hi) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    prefix[depth + 1] = prefix[depth] + v[depth];
    if (!feasible(depth + 1, prefix[depth + 1])) continue;
    if (depth + 1 < n) {
      ++depth;
      v[depth] = static_cast<long>(-bound - 1);
      continue;
    }

    for (std::size_t i = 0; i < n; ++i) coeffs[i] = v[i];
    RingElement w(group, coeffs);
    const IntMatrix m = regular_matrix(w);
    const std::uint64_t r = determinant_mod(m, kFilterPrime);
    if (r != 1 && r != kFilterPrime - 1) continue;
    if (auto cert = try_inverse(w)) found.push_back(std::move(*cert));
  }
  return found;
}

}  // namespace

SearchResult bounded_unit_search(const GroupPtr& group, long long bound, unsigned threads) {
  if (bound < 1) throw PreconditionViolation("search bound must be positive");
  const double candidates =
      std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(group->order()));
  if (candidates > kMaxSearchCandidates)
    throw SizeLimitExceeded("search box has " + std::to_string(candidates) +
                            " candidates, above the 1e7 budget");

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(2 * bound + 1)));
  std::vector<std::vector<UnitCertificate>> parts(threads);
  const long long width = 2 * bound + 1;
  const auto slice_lo = [&](unsigned t) { return -bound + width * t / threads; };

  if (threads == 1) {
    parts[0] = search_slice(group, bound, -bound, bound);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        parts[t] = search_slice(group, bound, slice_lo(t), slice_lo(t + 1) - 1);
      });
  }

  SearchResult result;
  result.bound = bound;
  for (auto& part : parts)
    for (auto& cert : part) result.units_found.push_back(std::move(cert));
  std::sort(result.units_found.begin(), result.units_found.end(),
            [](const UnitCertificate& x, const UnitCertificate& y) {
              return x.unit().coeffs() < y.unit().coeffs();
            });
  result.all_trivial = std::all_of(result.units_found.begin(), result.units_found.end(),
                                   [](const UnitCertificate& c) { return is_trivial_unit(c.unit()); });
  return result;
}

bool closure_probe(const GroupPtr& group, std::size_t samples, std::uint64_t seed) {
  const FiniteGroup& g = *group;
  if (!criterion(g).prediction)
    throw PreconditionViolation("closure_probe needs an abelian group or a hamiltonian 2-group");

  std::mt19937_64 rng(seed);
  const auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };

  // Units to build words from: trivial units, bicyclic and Hoechsmann units.
  std::vector<UnitCertificate> atoms;
  for (Element x = 0; x < g.order(); ++x) {
    const RingElement e = RingElement::embed(group, x);
    atoms.emplace_back(e, RingElement::embed(group, g.inverse(x)));
    atoms.emplace_back(-e, -RingElement::embed(group, g.inverse(x)));
  }
  const std::size_t atom_budget = std::max<std::size_t>(samples, 1);
  for (std::size_t t = 0; t < atom_budget; ++t) {
    const auto x = static_cast<Element>(pick(g.order()));
    const auto y = static_cast<Element>(pick(g.order()));
    atoms.push_back(bicyclic(group, x, y));

    const auto n = static_cast<long long>(element_order(g, x));
    if (n < 3) continue;
    std::vector<long long> units_mod_n;
    for (long long r = 1; r < n; ++r)
      if (std::gcd(r, n) == 1) units_mod_n.push_back(r);
    const long long i = units_mod_n[pick(units_mod_n.size())];
    const long long j = units_mod_n[pick(units_mod_n.size())];
    atoms.push_back(hoechsmann(group, HoechsmannParams::make(g, x, i, j, inverse_mod(i, n))));
  }

  std::vector<RingElement> symmetric;
  // Central trivial units that are symmetric: ±z with z central of order <= 2.
  for (Element z = 0; z < g.order(); ++z) {
    const RingElement e = RingElement::embed(group, z);
    if (g.power(z, 2) == kIdentity && is_central(e)) {
      symmetric.push_back(e);
      symmetric.push_back(-e);
    }
  }
  for (std::size_t s = 0; s < samples; ++s) {
    RingElement word = RingElement::one(group);
    const std::size_t len = 1 + pick(3);
    for (std::size_t l = 0; l < len; ++l) word = word * atoms[pick(atoms.size())].unit();
    symmetric.push_back(word * star(word));
  }

  for (std::size_t x = 0; x < symmetric.size(); ++x)
    for (std::size_t y = x; y < symmetric.size(); ++y) {
      const RingElement xy = symmetric[x] * symmetric[y];
      if (!is_symmetric(xy)) return false;
      if (xy != symmetric[y] * symmetric[x]) return false;
    }
  return true;
}

}  // namespace zg
