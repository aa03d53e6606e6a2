#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "zg/errors.hpp"
#include "zg/group.hpp"

namespace zg {

namespace {

void require_lattice_size(const FiniteGroup& group) {
  if (group.order() > kMaxLatticeOrder)
    throw SizeLimitExceeded("subgroup enumeration is limited to order " +
                            std::to_string(kMaxLatticeOrder) + ", got " +
                            std::to_string(group.order()));
}

bool is_odd_prime(std::size_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::size_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Lattice node during enumeration: a subgroup plus a small generating set.
struct Node {
  Subgroup subgroup;
  std::vector<Element> generators;
};

}  // namespace

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Element> generators) {
  std::vector<char> member(group.order(), 0);
  std::vector<Element> found = {kIdentity};
  member[kIdentity] = 1;
  // Right-multiplying by generators reaches the whole subgroup in a finite group.
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (Element s : generators) {
      const Element p = group.mul(found[next], s);
      if (!member[p]) {
        member[p] = 1;
        found.push_back(p);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found)};
}

Subgroup cyclic_subgroup(const FiniteGroup& group, Element g) {
  const Element gens[] = {g};
  return generated_subgroup(group, gens);
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  require_lattice_size(group);

  std::set<Subgroup> seen;
  std::vector<Node> worklist;
  std::vector<Element> cyclic_generators;  // one generator per distinct cyclic subgroup

  for (Element g = 0; g < group.order(); ++g) {
    Subgroup c = cyclic_subgroup(group, g);
    if (seen.insert(c).second) {
      cyclic_generators.push_back(g);
      worklist.push_back(Node{std::move(c), {g}});
    }
  }

  // Every subgroup is a join of cyclic subgroups, so joining each known
  // subgroup with each cyclic one closes the lattice.
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    for (Element g : cyclic_generators) {
      if (worklist[next].subgroup.contains(g)) continue;
      std::vector<Element> gens = worklist[next].generators;
      gens.push_back(g);
      Subgroup joined = generated_subgroup(group, gens);
      if (seen.insert(joined).second) worklist.push_back(Node{std::move(joined), std::move(gens)});
    }
  }

  std::vector<Subgroup> result(seen.begin(), seen.end());
  std::stable_sort(result.begin(), result.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.elements < y.elements;
  });
  return result;
}

bool is_normal(const FiniteGroup& group, const Subgroup& h) {
  const auto& els = h.elements;
  if (els.empty() || !std::is_sorted(els.begin(), els.end()) ||
      std::adjacent_find(els.begin(), els.end()) != els.end() || els.back() >= group.order())
    throw std::invalid_argument("subgroup must be a strictly increasing list of valid indices");
  if (els.front() != kIdentity) throw std::invalid_argument("subgroup does not contain the identity");
  for (Element x : els)
    for (Element y : els)
      if (!h.contains(group.mul(x, group.inverse(y))))
        throw std::invalid_argument("element set is not closed under the group operation");

  for (Element g = 0; g < group.order(); ++g)
    for (Element x : els)
      if (!h.contains(group.conjugate(x, g))) return false;
  return true;
}

Classification classify(const FiniteGroup& group) {
  require_lattice_size(group);
  Classification c;
  c.is_abelian = group.is_abelian();

  if (c.is_abelian) {
    c.all_subgroups_normal = true;
  } else {
    c.all_subgroups_normal = true;
    for (const Subgroup& h : all_subgroups(group)) {
      if (!is_normal(group, h)) {
        c.all_subgroups_normal = false;
        c.non_normal_subgroup = h;
        break;
      }
    }
  }

  c.is_hamiltonian = !c.is_abelian && c.all_subgroups_normal;
  if (c.is_hamiltonian) {
    bool two_group = true;
    for (Element g = 0; g < group.order() && two_group; ++g)
      two_group = is_power_of_two(element_order(group, g));
    c.is_hamiltonian_2group = two_group;
    if (!two_group) {
      for (Element g = 0; g < group.order(); ++g) {
        if (is_odd_prime(element_order(group, g))) {
          c.odd_prime_order_element = g;
          break;
        }
      }
    }
  }
  return c;
}

}  // namespace zg
