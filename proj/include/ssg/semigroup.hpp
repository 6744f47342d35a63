#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssg/triple.hpp"
#include "ssg/verdict.hpp"

namespace ssg {

// Zero, or a triple (alpha, g, beta) with d(alpha) = g d(beta).
struct SgElem {
  bool zero = true;
  Path alpha;
  Elem g;
  Path beta;
  std::uint64_t owner = 0;

  friend bool operator==(const SgElem& a, const SgElem& b) {
    if (a.owner != b.owner || a.zero != b.zero) return false;
    return a.zero || (a.alpha == b.alpha && a.g == b.g && a.beta == b.beta);
  }
};

class Semigroup {
 public:
  explicit Semigroup(const Triple& t) : t_(&t) {}

  const Triple& triple() const { return *t_; }

  SgElem zero() const;
  SgElem make(const Path& alpha, const Elem& g, const Path& beta) const;
  SgElem idempotent(const Path& alpha) const { return make(alpha, t_->group().identity(), alpha); }

  SgElem mul(const SgElem& s, const SgElem& t) const;
  SgElem star(const SgElem& s) const;

  bool is_idempotent(const SgElem& s) const;
  SgElem idempotent_meet(const SgElem& e, const SgElem& f) const;
  bool leq_idem(const SgElem& e, const SgElem& f) const;
  // natural partial order s <= t iff s = t s* s
  bool leq(const SgElem& s, const SgElem& t) const;

  // e <= s for a nonzero idempotent e
  bool dominates(const SgElem& s, const SgElem& e) const;

  // Direct search for a non-idempotent s = (alpha, g, alpha) dominating some f_{alpha tau},
  // |alpha| <= 1 and |tau| <= path_bound. For the integers, g ranges over [-group_bound, group_bound].
  // NO means such a pair was found; YES means none exists in the searched range.
  Truth search_e_star_unitary(std::size_t path_bound, long group_bound = 24) const;

  bool is_cover(const std::vector<SgElem>& family, const SgElem& f) const;

  std::string format(const SgElem& s) const;
  // "(alpha; g; beta)" or "0"
  SgElem parse(std::string_view text) const;

 private:
  void check_owner(const SgElem& s) const;
  const Triple* t_;
};

}  // namespace ssg
