#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "zg/group.hpp"
#include "zg/matrix.hpp"

namespace zg {

/**
 * An element of the integral group ring ZG: one integer coefficient per
 * group element, indexed like the group.
 */
class RingElement {
 public:
  /// Zero of ZG.
  explicit RingElement(GroupPtr group);
  RingElement(GroupPtr group, std::vector<mpz_class> coeffs);

  static RingElement zero(GroupPtr group) { return RingElement(std::move(group)); }
  static RingElement one(GroupPtr group);
  /// The basis element g.
  static RingElement embed(GroupPtr group, Element g);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  const mpz_class& operator[](Element g) const { return coeffs_.at(g); }
  mpz_class& operator[](Element g) { return coeffs_.at(g); }

  bool is_zero() const;
  /// Elements with a nonzero coefficient, in index order.
  std::vector<Element> support() const;

  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const mpz_class& c);

  /// Same group (by identity of the shared table) and same coefficients.
  bool operator==(const RingElement& rhs) const;

 private:
  void require_same_group(const RingElement& rhs) const;

  GroupPtr group_;
  std::vector<mpz_class> coeffs_;
};

RingElement operator+(RingElement lhs, const RingElement& rhs);
RingElement operator-(RingElement lhs, const RingElement& rhs);
RingElement operator-(RingElement w);
RingElement operator*(const mpz_class& c, RingElement w);
/// Convolution product through the group table.
RingElement operator*(const RingElement& lhs, const RingElement& rhs);

inline RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
inline RingElement neg(const RingElement& a) { return -a; }
inline RingElement scalar_mul(const mpz_class& c, const RingElement& a) { return c * a; }
inline RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }

/// The involution: linear extension of g -> g^-1.
RingElement star(const RingElement& w);

/// Sum of coefficients.
mpz_class augmentation(const RingElement& w);

/// 1 + x + ... + x^(n-1) with n the order of x.
RingElement hat(const GroupPtr& group, Element x);

/// Left regular representation: column j holds the coefficients of w * g_j.
IntMatrix regular_matrix(const RingElement& w);

/// Canonical text: "c·name" terms in index order joined by " + " / " − ",
/// unit coefficients elided, the identity term printed as its bare integer,
/// "0" for the zero element.
std::string to_string(const RingElement& w);

/**
 * A ring element together with a two-sided inverse. Construction checks
 * unit * inverse = inverse * unit = 1 exactly, so a certificate in hand is
 * always valid.
 */
class UnitCertificate {
 public:
  /// Throws VerificationFailure if the two products are not both 1.
  UnitCertificate(RingElement unit, RingElement inverse);

  const RingElement& unit() const noexcept { return unit_; }
  const RingElement& inverse() const noexcept { return inverse_; }

 private:
  RingElement unit_;
  RingElement inverse_;
};

/// Decides unit-hood via det(regular_matrix(w)) = ±1 and recovers the
/// inverse by an exact solve. Returns nullopt for non-units.
std::optional<UnitCertificate> try_inverse(const RingElement& w);

bool is_symmetric(const RingElement& w);
/// u * u^* = 1.
bool is_unitary(const UnitCertificate& u);
/// w commutes with every group element.
bool is_central(const RingElement& w);
/// w = ±g for some g.
bool is_trivial_unit(const RingElement& w);
/// w1 w2 != w2 w1.
bool commutator_nonzero(const RingElement& w1, const RingElement& w2);

}  // namespace zg
