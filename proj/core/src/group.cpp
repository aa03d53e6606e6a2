#include "zg/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace zg {

struct GroupFactory {
  static GroupPtr make(std::size_t order, std::vector<Element> table,
                       std::vector<std::string> names) {
    return std::shared_ptr<const FiniteGroup>(new FiniteGroup(
        FiniteGroup::Unchecked{}, order, std::move(table), std::move(names)));
  }
};

namespace {

std::vector<Element> compute_inverses(std::size_t order, std::span<const Element> table) {
  std::vector<Element> inverse(order, static_cast<Element>(order));
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t h = 0; h < order; ++h) {
      if (table[g * order + h] == kIdentity && table[h * order + g] == kIdentity) {
        inverse[g] = static_cast<Element>(h);
        break;
      }
    }
  }
  return inverse;
}

std::string power_name(std::string_view symbol, std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return std::string(symbol);
  return std::string(symbol) + "^" + std::to_string(e);
}

}  // namespace

FiniteGroup::FiniteGroup(Unchecked, std::size_t order, std::vector<Element> table,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  inverse_ = compute_inverses(order_, table_);
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0) throw std::invalid_argument("group order must be positive");
  if (table_.size() != order_ * order_) throw std::invalid_argument("table size is not order^2");
  if (names_.size() != order_) throw std::invalid_argument("need exactly one name per element");

  std::vector<char> seen(order_);
  for (std::size_t g = 0; g < order_; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < order_; ++h) {
      const Element v = table_[g * order_ + h];
      if (v >= order_ || seen[v]) throw std::invalid_argument("table rows are not permutations");
      seen[v] = 1;
    }
  }
  for (std::size_t h = 0; h < order_; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t g = 0; g < order_; ++g) {
      const Element v = table_[g * order_ + h];
      if (seen[v]) throw std::invalid_argument("table columns are not permutations");
      seen[v] = 1;
    }
  }
  for (std::size_t g = 0; g < order_; ++g) {
    if (table_[g] != g || table_[g * order_] != g)
      throw std::invalid_argument("index 0 is not a two-sided identity");
  }
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = 0; h < order_; ++h)
      for (std::size_t k = 0; k < order_; ++k)
        if (mul(mul(g, h), k) != mul(g, mul(h, k)))
          throw std::invalid_argument("multiplication is not associative");

  inverse_ = compute_inverses(order_, table_);
  // Latin square + identity already forces inverses; this guards the search.
  for (std::size_t g = 0; g < order_; ++g)
    if (inverse_[g] >= order_) throw std::invalid_argument("element without two-sided inverse");
}

Element FiniteGroup::power(Element g, long long e) const {
  if (e < 0) {
    g = inverse(g);
    e = -e;
  }
  Element result = kIdentity;
  Element base = g;
  auto n = static_cast<unsigned long long>(e);
  while (n != 0) {
    if (n & 1U) result = mul(result, base);
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = g + 1; h < order_; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  const auto first = name.find_first_not_of(" \t");
  if (first == std::string_view::npos) return std::nullopt;
  name = name.substr(first, name.find_last_not_of(" \t") - first + 1);

  std::string wanted;
  for (char c : name) {
    if (c == '*' || c == '.')
      wanted += "·";
    else
      wanted += c;
  }
  for (std::size_t g = 0; g < order_; ++g)
    if (names_[g] == wanted) return static_cast<Element>(g);
  return std::nullopt;
}

GroupPtr cyclic(std::size_t n, std::string_view symbol) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be at least 1");
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = power_name(symbol, i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupFactory::make(n, std::move(table), std::move(names));
}

GroupPtr quaternion8() {
  // index = i + 4e stands for a^i b^e.
  auto index = [](std::size_t i, std::size_t e) { return static_cast<Element>(i % 4 + 4 * e); };
  std::vector<Element> table(64);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t e = 0; e < 2; ++e)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t f = 0; f < 2; ++f) {
          Element r;
          if (e == 0) {
            r = index(i + j, f);
          } else if (f == 0) {
            // a^i b a^j = a^(i-j) b
            r = index(i + 4 - j, 1);
          } else {
            // a^i b a^j b = a^(i-j) b^2 = a^(i-j+2)
            r = index(i + 4 - j + 2, 0);
          }
          table[(i + 4 * e) * 8 + (j + 4 * f)] = r;
        }
  std::vector<std::string> names = {"1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"};
  return GroupFactory::make(8, std::move(table), std::move(names));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = power_name("r", i);
    names[n + i] = i == 0 ? std::string("s") : power_name("r", i) + "s";
  }
  // r^i s^e * r^j s^f = r^(i + (-1)^e j) s^(e+f)
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, e = x / n, j = y % n, f = y / n;
      const std::size_t rot = e == 0 ? (i + j) % n : (i + n - j) % n;
      table[x * order + y] = static_cast<Element>(rot + n * ((e + f) % 2));
    }
  return GroupFactory::make(order, std::move(table), std::move(names));
}

GroupPtr symmetric3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms = {{
      {0, 1, 2},  // 1
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123)
      {2, 0, 1},  // (132)
  }};
  std::vector<Element> table(36);
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      Perm composed{};
      for (int p = 0; p < 3; ++p) composed[p] = perms[h][perms[g][p]];
      const auto it = std::find(perms.begin(), perms.end(), composed);
      table[g * 6 + h] = static_cast<Element>(it - perms.begin());
    }
  std::vector<std::string> names = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
  return GroupFactory::make(6, std::move(table), std::move(names));
}

GroupPtr elementary_abelian2(std::size_t k) {
  if (k > 7) throw std::invalid_argument("elementary_abelian2 supports k <= 7");
  const std::size_t order = std::size_t{1} << k;
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t g = 0; g < order; ++g) {
    std::string name;
    for (std::size_t bit = 0; bit < k; ++bit)
      if (g & (std::size_t{1} << bit)) name += "e" + std::to_string(bit + 1);
    names[g] = name.empty() ? "1" : name;
    for (std::size_t h = 0; h < order; ++h) table[g * order + h] = static_cast<Element>(g ^ h);
  }
  return GroupFactory::make(order, std::move(table), std::move(names));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), n = h.order(), order = m * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const auto x1 = static_cast<Element>(x / n), x2 = static_cast<Element>(x % n);
    if (x1 == kIdentity && x2 == kIdentity)
      names[x] = "1";
    else if (x2 == kIdentity)
      names[x] = g.name(x1);
    else if (x1 == kIdentity)
      names[x] = h.name(x2);
    else
      names[x] = g.name(x1) + "·" + h.name(x2);
    for (std::size_t y = 0; y < order; ++y) {
      const auto y1 = static_cast<Element>(y / n), y2 = static_cast<Element>(y % n);
      table[x * order + y] = static_cast<Element>(g.mul(x1, y1) * n + h.mul(x2, y2));
    }
  }
  return GroupFactory::make(order, std::move(table), std::move(names));
}

std::size_t element_order(const FiniteGroup& group, Element g) {
  std::size_t m = 1;
  for (Element p = g; p != kIdentity; p = group.mul(p, g)) ++m;
  return m;
}

}  // namespace zg
