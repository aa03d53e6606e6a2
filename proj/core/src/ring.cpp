#include "zg/ring.hpp"

#include <stdexcept>
#include <utility>

#include "zg/errors.hpp"

namespace zg {

RingElement::RingElement(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("ring element needs a group");
  coeffs_.resize(group_->order());
}

RingElement::RingElement(GroupPtr group, std::vector<mpz_class> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (!group_) throw std::invalid_argument("ring element needs a group");
  if (coeffs_.size() != group_->order())
    throw std::invalid_argument("coefficient vector length must equal the group order");
}

RingElement RingElement::one(GroupPtr group) { return embed(std::move(group), kIdentity); }

RingElement RingElement::embed(GroupPtr group, Element g) {
  RingElement w(std::move(group));
  w.coeffs_.at(g) = 1;
  return w;
}

bool RingElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::vector<Element> RingElement::support() const {
  std::vector<Element> s;
  for (Element g = 0; g < coeffs_.size(); ++g)
    if (coeffs_[g] != 0) s.push_back(g);
  return s;
}

void RingElement::require_same_group(const RingElement& rhs) const {
  if (group_ != rhs.group_) throw GroupMismatch();
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same_group(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same_group(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator*=(const mpz_class& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

bool RingElement::operator==(const RingElement& rhs) const {
  return group_ == rhs.group_ && coeffs_ == rhs.coeffs_;
}

RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }

RingElement operator-(RingElement w) {
  w *= -1;
  return w;
}

RingElement operator*(const mpz_class& c, RingElement w) {
  w *= c;
  return w;
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs) {
  if (lhs.group_ptr() != rhs.group_ptr()) throw GroupMismatch();
  const FiniteGroup& g = lhs.group();
  RingElement out(lhs.group_ptr());
  const auto& a = lhs.coeffs();
  const auto& b = rhs.coeffs();
  const auto lsupp = lhs.support();
  const auto rsupp = rhs.support();
  for (Element i : lsupp)
    for (Element j : rsupp) mpz_addmul(out[g.mul(i, j)].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return out;
}

RingElement star(const RingElement& w) {
  RingElement out(w.group_ptr());
  for (Element g = 0; g < w.group().order(); ++g) out[w.group().inverse(g)] = w[g];
  return out;
}

mpz_class augmentation(const RingElement& w) {
  mpz_class sum = 0;
  for (const auto& c : w.coeffs()) sum += c;
  return sum;
}

RingElement hat(const GroupPtr& group, Element x) {
  RingElement out(group);
  Element p = kIdentity;
  do {
    out[p] = 1;
    p = group->mul(p, x);
  } while (p != kIdentity);
  return out;
}

IntMatrix regular_matrix(const RingElement& w) {
  const FiniteGroup& g = w.group();
  const std::size_t n = g.order();
  IntMatrix m(n, n);
  for (Element i : w.support())
    for (Element j = 0; j < n; ++j) m(g.mul(i, j), j) = w[i];
  return m;
}

std::string to_string(const RingElement& w) {
  std::string out;
  bool first = true;
  for (Element g : w.support()) {
    const mpz_class& c = w[g];
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (first)
      out += negative ? "−" : "";
    else
      out += negative ? " − " : " + ";
    first = false;
    if (g == kIdentity) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "·";
      out += w.group().name(g);
    }
  }
  return first ? std::string("0") : out;
}

UnitCertificate::UnitCertificate(RingElement unit, RingElement inverse)
    : unit_(std::move(unit)), inverse_(std::move(inverse)) {
  const RingElement one = RingElement::one(unit_.group_ptr());
  if (unit_ * inverse_ != one || inverse_ * unit_ != one)
    throw VerificationFailure("claimed inverse does not multiply to 1 on both sides: " +
                              to_string(unit_));
}

std::optional<UnitCertificate> try_inverse(const RingElement& w) {
  const IntMatrix m = regular_matrix(w);
  const mpz_class det = determinant(m);
  if (det != 1 && det != -1) return std::nullopt;

  // R(w) v = e_1 means w * v = 1, so v is the coefficient vector of w^-1.
  std::vector<mpz_class> e(w.group().order());
  e[kIdentity] = 1;
  ScaledSolution sol = solve_scaled(m, e);
  if (sol.det != det)
    throw VerificationFailure("elimination disagreed on det for " + to_string(w));
  for (auto& v : sol.scaled) v *= det;  // 1/det = det for det = ±1
  return UnitCertificate(w, RingElement(w.group_ptr(), std::move(sol.scaled)));
}

bool is_symmetric(const RingElement& w) { return star(w) == w; }

bool is_unitary(const UnitCertificate& u) {
  return u.unit() * star(u.unit()) == RingElement::one(u.unit().group_ptr());
}

bool is_central(const RingElement& w) {
  // (w g)[k] = w[k g^-1], (g w)[k] = w[g^-1 k].
  const FiniteGroup& grp = w.group();
  for (Element g = 0; g < grp.order(); ++g) {
    const Element gi = grp.inverse(g);
    for (Element k = 0; k < grp.order(); ++k)
      if (w[grp.mul(k, gi)] != w[grp.mul(gi, k)]) return false;
  }
  return true;
}

bool is_trivial_unit(const RingElement& w) {
  const auto s = w.support();
  return s.size() == 1 && abs(w[s.front()]) == 1;
}

bool commutator_nonzero(const RingElement& w1, const RingElement& w2) {
  return w1 * w2 != w2 * w1;
}

}  // namespace zg
