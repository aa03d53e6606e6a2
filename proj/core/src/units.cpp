#include "zg/units.hpp"

#include <numeric>
#include <string>

#include "zg/errors.hpp"

namespace zg {

namespace {

bool is_odd_prime(long long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingElement geometric_sum(const GroupPtr& group, Element base, long long terms) {
  RingElement out(group);
  Element p = kIdentity;
  for (long long t = 0; t < terms; ++t) {
    out[p] += 1;
    p = group->mul(p, base);
  }
  return out;
}

bool divisible_by(const RingElement& w, unsigned long m) {
  for (const auto& c : w.coeffs())
    if (mpz_divisible_ui_p(c.get_mpz_t(), m) == 0) return false;
  return true;
}

}  // namespace

long long inverse_mod(long long a, long long n) {
  if (n <= 0) throw PreconditionViolation("modulus must be positive");
  if (std::gcd(a, n) != 1) throw PreconditionViolation("value is not invertible modulo n");
  if (n == 1) return 1;
  for (long long k = 1; k < n; ++k)
    if (((a % n + n) % n) * k % n == 1) return k;
  throw PreconditionViolation("no inverse found");
}

UnitCertificate bicyclic(const GroupPtr& group, Element x, Element y) {
  if (x >= group->order() || y >= group->order())
    throw PreconditionViolation("bicyclic: element index out of range");
  const RingElement one = RingElement::one(group);
  const RingElement nilpotent =
      (one - RingElement::embed(group, x)) * RingElement::embed(group, y) * hat(group, x);
  return UnitCertificate(one + nilpotent, one - nilpotent);
}

std::pair<UnitCertificate, UnitCertificate> symmetric_products(const UnitCertificate& u) {
  const RingElement u_star = star(u.unit());
  const RingElement inv_star = star(u.inverse());  // (u^*)^-1 = (u^-1)^*
  UnitCertificate left(u.unit() * u_star, inv_star * u.inverse());
  UnitCertificate right(u_star * u.unit(), u.inverse() * inv_star);
  if (!is_symmetric(left.unit()) || !is_symmetric(right.unit()))
    throw VerificationFailure("u u^* or u^* u failed to be symmetric");
  return {std::move(left), std::move(right)};
}

HoechsmannParams HoechsmannParams::make(const FiniteGroup& group, Element x, long long i,
                                        long long j, long long k) {
  if (x >= group.order()) throw PreconditionViolation("hoechsmann: element index out of range");
  HoechsmannParams p;
  p.x = x;
  p.n = static_cast<long long>(element_order(group, x));
  p.i = i;
  p.j = j;
  p.k = k;
  const auto in_range = [&](long long v) { return v >= 1 && v < p.n; };
  if (!in_range(i) || !in_range(j) || !in_range(k))
    throw PreconditionViolation("hoechsmann: need 1 <= i, j, k < n = " + std::to_string(p.n));
  if (std::gcd(i, p.n) != 1 || std::gcd(j, p.n) != 1)
    throw PreconditionViolation("hoechsmann: i and j must be coprime to n = " +
                                std::to_string(p.n));
  if ((i * k) % p.n != 1 % p.n)
    throw PreconditionViolation("hoechsmann: need i*k = 1 (mod " + std::to_string(p.n) + ")");
  return p;
}

mpz_class HoechsmannParams::scalar() const {
  mpz_class numerator = 1 - mpz_class(static_cast<long>(i)) * static_cast<long>(k);
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t());
  return q;
}

RingElement hoechsmann_factors(const GroupPtr& group, const HoechsmannParams& params) {
  const FiniteGroup& g = *group;
  const RingElement first = geometric_sum(group, g.power(params.x, params.j), params.i);
  const RingElement second = geometric_sum(group, g.power(params.x, params.i), params.k);
  return first * second;
}

UnitCertificate hoechsmann(const GroupPtr& group, const HoechsmannParams& params) {
  const RingElement u =
      hoechsmann_factors(group, params) + params.scalar() * hat(group, params.x);
  auto cert = try_inverse(u);
  if (!cert)
    throw VerificationFailure("Hoechsmann element is not a unit: " + to_string(u));
  return std::move(*cert);
}

const char* to_string(PairConstruction c) {
  switch (c) {
    case PairConstruction::BicyclicDerived:
      return "bicyclic-derived";
    case PairConstruction::HoechsmannDerived:
      return "hoechsmann-derived";
  }
  return "unknown";
}

SymmetricPairReport make_verified_pair(
    UnitCertificate s1, UnitCertificate s2, PairConstruction construction,
    std::variant<BicyclicPairParameters, QuaternionPairParameters> parameters) {
  const bool symmetric = is_symmetric(s1.unit()) && is_symmetric(s2.unit());
  const bool noncommuting = commutator_nonzero(s1.unit(), s2.unit());
  if (!symmetric) throw VerificationFailure("constructed pair is not symmetric");
  if (!noncommuting) throw VerificationFailure("constructed symmetric pair commutes");
  return SymmetricPairReport{std::move(s1), std::move(s2), construction, std::move(parameters),
                             noncommuting, symmetric};
}

SymmetricPairReport quaternion_pair(const GroupPtr& group, Element a, Element b, Element g) {
  const FiniteGroup& grp = *group;
  if (a >= grp.order() || b >= grp.order() || g >= grp.order())
    throw PreconditionViolation("quaternion_pair: element index out of range");
  if (element_order(grp, a) != 4 || element_order(grp, b) != 4 ||
      grp.power(a, 2) != grp.power(b, 2) ||
      grp.mul(grp.mul(b, a), grp.inverse(b)) != grp.inverse(a))
    throw PreconditionViolation("quaternion_pair: a, b do not generate a copy of Q8");
  const auto p = static_cast<long long>(element_order(grp, g));
  if (!is_odd_prime(p)) throw PreconditionViolation("quaternion_pair: g must have odd prime order");
  if (!grp.commute(a, g) || !grp.commute(b, g))
    throw PreconditionViolation("quaternion_pair: g must commute with a and b");

  QuaternionPairParameters params;
  params.a = a;
  params.b = b;
  params.g = g;
  params.ag = grp.mul(a, g);
  params.bg = grp.mul(b, g);
  params.p = p;

  long long i = 3, j = 3, k = 0;
  if (p == 3) {
    i = j = k = 5;
    params.multiplier_exponent = 4;
  } else {
    k = inverse_mod(3, 4 * p);
    params.multiplier_exponent = -2;
  }
  params.u_params = HoechsmannParams::make(grp, params.ag, i, j, k);
  params.v_params = HoechsmannParams::make(grp, params.bg, i, j, k);
  params.scalar = params.u_params.scalar();

  const UnitCertificate u = hoechsmann(group, params.u_params);
  const UnitCertificate v = hoechsmann(group, params.v_params);

  const auto scale = [&](Element x, const UnitCertificate& w) {
    const Element m = grp.power(x, params.multiplier_exponent);
    const RingElement mult = RingElement::embed(group, m);
    const RingElement mult_inv = RingElement::embed(group, grp.inverse(m));
    return UnitCertificate(mult * w.unit(), w.inverse() * mult_inv);
  };
  UnitCertificate s1 = scale(params.ag, u);
  UnitCertificate s2 = scale(params.bg, v);
  return make_verified_pair(std::move(s1), std::move(s2), PairConstruction::HoechsmannDerived,
                            std::move(params));
}

GroupPtr quaternion_cyclic_group(long long p) {
  if (!is_odd_prime(p) || p > 13)
    throw PreconditionViolation("p must be an odd prime no larger than 13");
  return direct_product(*quaternion8(), *cyclic(static_cast<std::size_t>(p), "g"));
}

namespace {

struct CanonicalQ8xCp {
  GroupPtr group;
  Element a, b, g;
};

CanonicalQ8xCp canonical_q8xcp(long long p) {
  GroupPtr group = quaternion_cyclic_group(p);
  // Index q * p + c for (q in Q8, c in C_p); a = 1, b = 4 in Q8, g = 1 in C_p.
  const auto idx = [p](long long q, long long c) { return static_cast<Element>(q * p + c); };
  return {std::move(group), idx(1, 0), idx(4, 0), idx(0, 1)};
}

}  // namespace

SymmetricPairReport quaternion_cyclic_pair(long long p) {
  const auto c = canonical_q8xcp(p);
  return quaternion_pair(c.group, c.a, c.b, c.g);
}

QuaternionPairDiagnostics quaternion_cyclic_diagnostics(long long p) {
  if (p == 3) throw PreconditionViolation("diagnostics apply to p != 3 only");
  const auto c = canonical_q8xcp(p);
  const FiniteGroup& grp = *c.group;
  const GroupPtr& group = c.group;

  const SymmetricPairReport pair = quaternion_pair(group, c.a, c.b, c.g);
  const auto& params = std::get<QuaternionPairParameters>(pair.parameters);
  const long long k = params.u_params.k;

  QuaternionPairDiagnostics d{group,
                              params,
                              hoechsmann_factors(group, params.u_params),
                              hoechsmann_factors(group, params.v_params),
                              RingElement(group),
                              RingElement(group),
                              RingElement(group),
                              RingElement(group),
                              RingElement(group),
                              RingElement(group)};

  // Keep the terms x^(3m) for odd m in 1..k, with their coefficients from u2.
  const auto odd_part = [&](const RingElement& full, Element x) {
    RingElement out(group);
    for (long long m = 1; m <= k; m += 2) {
      const Element e = grp.power(x, 3 * m);
      out[e] = full[e];
    }
    return out;
  };
  d.u3 = odd_part(d.u2, params.ag);
  d.v3 = odd_part(d.v2, params.bg);
  d.even_part_central = is_central(d.u2 - d.u3) && is_central(d.v2 - d.v3);

  d.u3v3 = d.u3 * d.v3;
  d.v3u3 = d.v3 * d.u3;

  const Element ab = grp.mul(c.a, c.b);
  const Element a3b = grp.mul(grp.power(c.a, 3), c.b);
  const auto term = [&](long long coeff, Element q, long long gexp) {
    return mpz_class(static_cast<long>(coeff)) * RingElement::embed(group, grp.mul(q, grp.power(c.g, gexp)));
  };
  d.expected_uv = term(4, ab, 6) + term(8, a3b, 4) + term(4, ab, 2);
  d.expected_vu = term(4, a3b, 6) + term(8, ab, 4) + term(4, a3b, 2);

  d.residue_check = divisible_by(d.u3v3 - d.expected_uv, 3) && divisible_by(d.v3u3 - d.expected_vu, 3);
  d.residues_differ = !divisible_by(d.u3v3 - d.v3u3, 3);
  return d;
}

}  // namespace zg
