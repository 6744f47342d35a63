#include "ssg/group.hpp"

#include <unordered_map>

#include "ssg/errors.hpp"

namespace ssg {

Group Group::finite(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "a group needs at least one element");
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(names[i], i).second) throw Error(ErrorKind::InvalidGroup, "duplicate element '" + names[i] + "'");
  if (mul.size() != n) throw Error(ErrorKind::InvalidGroup, "multiplication table has wrong number of rows");
  for (const auto& row : mul) {
    if (row.size() != n) throw Error(ErrorKind::InvalidGroup, "multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw Error(ErrorKind::InvalidGroup, "multiplication table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw Error(ErrorKind::InvalidGroup,
                      "not associative at (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) id = e;
  }
  if (id == n) throw Error(ErrorKind::InvalidGroup, "no identity element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] == id && mul[b][a] == id) inv[a] = b;
    if (inv[a] == n) throw Error(ErrorKind::InvalidGroup, "element '" + names[a] + "' has no inverse");
  }
  Group g;
  g.kind_ = Kind::Finite;
  g.names_ = std::move(names);
  g.mul_ = std::move(mul);
  g.inv_ = std::move(inv);
  g.identity_ = id;
  return g;
}

Group Group::integers() { return Group{}; }

Elem Group::identity() const { return is_finite() ? Elem(static_cast<unsigned long>(identity_)) : Elem(0); }

bool Group::is_identity(const Elem& g) const { return is_finite() ? index(g) == identity_ : g == 0; }

Elem Group::mul(const Elem& a, const Elem& b) const {
  if (!is_finite()) return a + b;
  return Elem(static_cast<unsigned long>(mul_[index(a)][index(b)]));
}

Elem Group::inv(const Elem& a) const {
  if (!is_finite()) return -a;
  return Elem(static_cast<unsigned long>(inv_[index(a)]));
}

bool Group::contains(const Elem& g) const {
  if (!is_finite()) return true;
  return g >= 0 && g < static_cast<unsigned long>(order());
}

std::vector<Elem> Group::elements() const {
  if (!is_finite()) throw Error(ErrorKind::UnsupportedBackend, "the integers cannot be enumerated");
  std::vector<Elem> out;
  for (std::size_t i = 0; i < order(); ++i) out.emplace_back(static_cast<unsigned long>(i));
  return out;
}

std::string Group::name(const Elem& g) const { return is_finite() ? names_[index(g)] : g.get_str(); }

Elem Group::parse(std::string_view text) const {
  if (!is_finite()) return parse_bigint(text);
  for (std::size_t i = 0; i < order(); ++i)
    if (names_[i] == text) return Elem(static_cast<unsigned long>(i));
  throw Error(ErrorKind::Parse, "unknown group element '" + std::string(text) + "'");
}

}  // namespace ssg
