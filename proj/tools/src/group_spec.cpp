#include "zg/cli/group_spec.hpp"

#include <cctype>
#include <limits>

namespace zg::cli {

std::size_t GroupAtom::order() const {
  switch (kind) {
    case Kind::Cyclic:
      return parameter;
    case Kind::Quaternion8:
      return 8;
    case Kind::Dihedral:
      return 2 * parameter;
    case Kind::Symmetric3:
      return 6;
    case Kind::Elementary2:
      return std::size_t{1} << parameter;
  }
  return 0;
}

std::string GroupAtom::text() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(parameter);
    case Kind::Quaternion8:
      return "Q8";
    case Kind::Dihedral:
      return "D" + std::to_string(parameter);
    case Kind::Symmetric3:
      return "S3";
    case Kind::Elementary2:
      return "E2^" + std::to_string(parameter);
  }
  return "?";
}

std::string GroupSpec::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += "x";
    out += atoms[i].text();
  }
  return out;
}

std::size_t GroupSpec::order() const {
  std::size_t n = 1;
  for (const auto& a : atoms) n *= a.order();
  return n;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      positions_.push_back(i);
    }
    end_position_ = text.size();
  }

  GroupSpec parse() {
    if (chars_.empty()) throw SpecError("empty group spec", 0);
    GroupSpec spec;
    spec.atoms.push_back(atom());
    while (pos_ < chars_.size()) {
      if (chars_[pos_] != 'x') throw SpecError("expected 'x' between factors", position());
      ++pos_;
      spec.atoms.push_back(atom());
    }
    return spec;
  }

 private:
  std::size_t position() const { return pos_ < chars_.size() ? positions_[pos_] : end_position_; }

  bool accept(std::string_view literal) {
    if (chars_.size() - pos_ < literal.size()) return false;
    for (std::size_t i = 0; i < literal.size(); ++i)
      if (chars_[pos_ + i] != literal[i]) return false;
    pos_ += literal.size();
    return true;
  }

  std::size_t integer() {
    const std::size_t start = position();
    if (pos_ >= chars_.size() || !std::isdigit(static_cast<unsigned char>(chars_[pos_])))
      throw SpecError("expected an integer", start);
    std::size_t value = 0;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
      if (value > std::numeric_limits<std::size_t>::max() / 10 - 1)
        throw SpecError("integer too large", start);
      value = value * 10 + static_cast<std::size_t>(chars_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  GroupAtom atom() {
    const std::size_t start = position();
    using K = GroupAtom::Kind;
    if (accept("Q8")) return {K::Quaternion8, 0};
    if (accept("S3")) return {K::Symmetric3, 0};
    if (accept("E2^")) {
      const std::size_t k = integer();
      if (k > 7) throw SpecError("E2^k needs k <= 7", start);
      return {K::Elementary2, k};
    }
    if (accept("C")) {
      const std::size_t n = integer();
      if (n < 1 || n > kMaxLatticeOrder)
        throw SpecError("Cn needs 1 <= n <= " + std::to_string(kMaxLatticeOrder), start);
      return {K::Cyclic, n};
    }
    if (accept("D")) {
      const std::size_t n = integer();
      if (n < 3 || 2 * n > kMaxLatticeOrder)
        throw SpecError("Dn needs 3 <= n <= " + std::to_string(kMaxLatticeOrder / 2), start);
      return {K::Dihedral, n};
    }
    throw SpecError("expected one of C<n>, Q8, D<n>, S3, E2^<k>", start);
  }

  std::vector<char> chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
};

GroupPtr build_atom(const GroupAtom& atom) {
  switch (atom.kind) {
    case GroupAtom::Kind::Cyclic:
      return cyclic(atom.parameter);
    case GroupAtom::Kind::Quaternion8:
      return quaternion8();
    case GroupAtom::Kind::Dihedral:
      return dihedral(atom.parameter);
    case GroupAtom::Kind::Symmetric3:
      return symmetric3();
    case GroupAtom::Kind::Elementary2:
      return elementary_abelian2(atom.parameter);
  }
  return nullptr;
}

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec = Parser(text).parse();
  std::size_t order = 1;
  for (const auto& a : spec.atoms) {
    order *= a.order();
    if (order > kMaxLatticeOrder)
      throw SpecError("group order exceeds " + std::to_string(kMaxLatticeOrder), text.size());
  }
  return spec;
}

GroupPtr build_group(const GroupSpec& spec) {
  GroupPtr g = build_atom(spec.atoms.front());
  for (std::size_t i = 1; i < spec.atoms.size(); ++i)
    g = direct_product(*g, *build_atom(spec.atoms[i]));
  return g;
}

}  // namespace zg::cli
