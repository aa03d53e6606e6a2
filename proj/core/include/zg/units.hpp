#pragma once

#include <gmpxx.h>

#include <utility>
#include <variant>

#include "zg/group.hpp"
#include "zg/ring.hpp"

namespace zg {

/// u = 1 + (1 - x) y x^, certified with inverse 1 - (1 - x) y x^.
/// Equals 1 exactly when y^-1 x y lies in <x>.
UnitCertificate bicyclic(const GroupPtr& group, Element x, Element y);

/// (u u^*, u^* u), both symmetric, with inverses assembled from u's certificate.
std::pair<UnitCertificate, UnitCertificate> symmetric_products(const UnitCertificate& u);

/// Parameters of a Hoechsmann unit built on an element x of order n.
struct HoechsmannParams {
  Element x = kIdentity;
  long long n = 1;
  long long i = 1;
  long long j = 1;
  long long k = 1;

  /// Checks gcd(i,n) = gcd(j,n) = 1, i k = 1 (mod n) and 1 <= i,j,k < n.
  /// Throws PreconditionViolation otherwise.
  static HoechsmannParams make(const FiniteGroup& group, Element x, long long i, long long j,
                               long long k);

  /// (1 - i k) / n, an integer by construction.
  mpz_class scalar() const;
};

/// (1 + x^j + ... + x^(j(i-1))) (1 + x^i + ... + x^(i(k-1))), without the x^ term.
RingElement hoechsmann_factors(const GroupPtr& group, const HoechsmannParams& params);

/// hoechsmann_factors(...) + (1 - ik)/n * x^, certified through try_inverse.
/// Throws VerificationFailure if the element is not a unit.
UnitCertificate hoechsmann(const GroupPtr& group, const HoechsmannParams& params);

enum class PairConstruction { BicyclicDerived, HoechsmannDerived };

const char* to_string(PairConstruction c);

struct BicyclicPairParameters {
  Element x = kIdentity;
  Element y = kIdentity;
};

/// Inputs of the pair built from Hoechsmann units on ag and bg in a copy of
/// Q8 x C_p: a, b generate Q8, g has odd prime order p and commutes with both.
struct QuaternionPairParameters {
  Element a = kIdentity;
  Element b = kIdentity;
  Element g = kIdentity;
  Element ag = kIdentity;
  Element bg = kIdentity;
  long long p = 0;
  HoechsmannParams u_params;  // on ag
  HoechsmannParams v_params;  // on bg
  mpz_class scalar;
  /// s1 = (ag)^e u and s2 = (bg)^e v.
  long long multiplier_exponent = 0;
};

/// Two certified symmetric units that do not commute. Every instance handed
/// out by this library has passed both checks.
struct SymmetricPairReport {
  UnitCertificate s1;
  UnitCertificate s2;
  PairConstruction construction;
  std::variant<BicyclicPairParameters, QuaternionPairParameters> parameters;
  bool commutator_nonzero = false;
  bool symmetry_verified = false;
};

/// Verifies symmetry of both units and their noncommutation; throws
/// VerificationFailure when either check fails.
SymmetricPairReport make_verified_pair(
    UnitCertificate s1, UnitCertificate s2, PairConstruction construction,
    std::variant<BicyclicPairParameters, QuaternionPairParameters> parameters);

/// The noncommuting symmetric pair inside <a, b, g> ~ Q8 x C_p.
/// p != 3: i = j = 3, k = 3^-1 mod 4p, multiplier (ag)^-2.
/// p == 3: i = j = k = 5, multiplier (ag)^4.
SymmetricPairReport quaternion_pair(const GroupPtr& group, Element a, Element b, Element g);

/// Builds Q8 x C_p (cyclic generator named "g") and runs quaternion_pair on
/// the canonical a, b, g. p must be an odd prime <= 13.
SymmetricPairReport quaternion_cyclic_pair(long long p);

/// Group Q8 x C_p with generator symbol "g", as used by quaternion_cyclic_pair.
GroupPtr quaternion_cyclic_group(long long p);

/// Intermediate elements of the noncommutation argument for p != 3.
struct QuaternionPairDiagnostics {
  GroupPtr group;
  QuaternionPairParameters parameters;
  RingElement u2;  // product of the two Hoechsmann factors on ag
  RingElement v2;
  RingElement u3;  // odd multiples of 3 in the exponent: 2x^3 + 3x^9 + ... + 2x^(3k)
  RingElement v3;
  RingElement u3v3;
  RingElement v3u3;
  RingElement expected_uv;  // 4 ab g^6 + 8 a^3b g^4 + 4 ab g^2
  RingElement expected_vu;  // 4 a^3b g^6 + 8 ab g^4 + 4 a^3b g^2
  bool even_part_central = false;
  /// u3v3 - expected_uv and v3u3 - expected_vu are both divisible by 3.
  bool residue_check = false;
  /// u3v3 - v3u3 is not divisible by 3, so u3 and v3 do not commute.
  bool residues_differ = false;
};

QuaternionPairDiagnostics quaternion_cyclic_diagnostics(long long p);

/// Least positive k with a k = 1 (mod n); requires gcd(a, n) = 1.
long long inverse_mod(long long a, long long n);

}  // namespace zg
