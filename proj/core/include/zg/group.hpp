#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zg {

/// Index of an element inside a FiniteGroup. Index 0 is always the identity.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// Largest group order accepted by subgroup-lattice enumeration.
inline constexpr std::size_t kMaxLatticeOrder = 128;

/**
 * A finite group given by its full multiplication table.
 *
 * Instances are immutable and validated on construction: the table is a
 * Latin square, index 0 is a two-sided identity, every element has a
 * two-sided inverse and the product is associative.
 */
class FiniteGroup {
 public:
  /// Validates and wraps a row-major table (`table[g * order + h]` is the
  /// index of gh). Throws std::invalid_argument when any group axiom fails.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names);

  std::size_t order() const noexcept { return order_; }
  Element mul(Element g, Element h) const noexcept { return table_[g * order_ + h]; }
  Element inverse(Element g) const noexcept { return inverse_[g]; }
  const std::string& name(Element g) const { return names_.at(g); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const Element> table() const noexcept { return table_; }

  /// g^e for any integer e (negative exponents use the inverse).
  Element power(Element g, long long e) const;
  Element conjugate(Element h, Element by) const noexcept {  // by^-1 h by
    return mul(mul(inverse(by), h), by);
  }
  bool commute(Element g, Element h) const noexcept { return mul(g, h) == mul(h, g); }
  bool is_abelian() const noexcept;

  /// Looks an element up by display name. `*` and `.` are accepted in place
  /// of the product separator `·`; surrounding whitespace is ignored.
  std::optional<Element> find(std::string_view name) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  struct Unchecked {};
  FiniteGroup(Unchecked, std::size_t order, std::vector<Element> table,
              std::vector<std::string> names);
  friend struct GroupFactory;

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<std::string> names_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Cyclic group of order n, elements named 1, x, x^2, ... (symbol configurable).
GroupPtr cyclic(std::size_t n, std::string_view symbol = "x");

/// Q8 = <a, b | a^4 = 1, a^2 = b^2, ba = a^3 b>, elements 1, a, a^2, a^3, b, ab, a^2b, a^3b.
GroupPtr quaternion8();

/// Dihedral group of order 2n: rotations r^i then reflections r^i s.
GroupPtr dihedral(std::size_t n);

/// S3 as permutations of {1,2,3}: 1, (12), (13), (23), (123), (132).
/// Products compose left to right: (gh)(p) = h(g(p)).
GroupPtr symmetric3();

/// (C2)^k, element index is a bitmask over generators e1..ek.
GroupPtr elementary_abelian2(std::size_t k);

/// G x H with index g * |H| + h; names joined by "·", identity factors omitted.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Least m >= 1 with g^m = 1.
std::size_t element_order(const FiniteGroup& group, Element g);

/// A subgroup stored as a strictly increasing list of element indices.
struct Subgroup {
  std::vector<Element> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element g) const;
  auto operator<=>(const Subgroup&) const = default;
};

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> generators);

/// Cyclic subgroup <g>.
Subgroup cyclic_subgroup(const FiniteGroup& group, Element g);

/// The full subgroup lattice, sorted by size then lexicographically.
/// Throws SizeLimitExceeded above kMaxLatticeOrder.
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

/// True iff g^-1 H g = H for all g. Throws std::invalid_argument if H is
/// not a subgroup (missing identity, not closed, out-of-range index).
bool is_normal(const FiniteGroup& group, const Subgroup& h);

struct Classification {
  bool is_abelian = false;
  bool is_hamiltonian = false;
  bool is_hamiltonian_2group = false;
  bool all_subgroups_normal = false;
  /// First non-normal subgroup in canonical lattice order, if any.
  std::optional<Subgroup> non_normal_subgroup;
  /// For hamiltonian groups that are not 2-groups: first element of odd prime order.
  std::optional<Element> odd_prime_order_element;
};

Classification classify(const FiniteGroup& group);

}  // namespace zg
