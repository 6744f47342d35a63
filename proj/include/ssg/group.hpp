#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/bigint.hpp"

namespace ssg {

// Group elements are integers: table indices for a finite group, the
// element itself for the integers under addition.
using Elem = BigInt;

class Group {
 public:
  enum class Kind { Finite, Integers };

  // mul[i][j] is the index of names[i]*names[j]. Checks the group axioms.
  static Group finite(std::vector<std::string> names, std::vector<std::vector<std::size_t>> mul);
  static Group integers();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::size_t order() const { return names_.size(); }

  Elem identity() const;
  bool is_identity(const Elem& g) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool contains(const Elem& g) const;

  std::vector<Elem> elements() const;
  std::size_t index(const Elem& g) const { return g.get_ui(); }

  std::string name(const Elem& g) const;
  Elem parse(std::string_view text) const;

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return mul_; }

 private:
  Kind kind_ = Kind::Integers;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
};

}  // namespace ssg
