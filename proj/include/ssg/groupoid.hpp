#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "ssg/analysis.hpp"
#include "ssg/semigroup.hpp"
#include "ssg/triple.hpp"

namespace ssg {

// An eventually periodic sequence of group elements indexed from 1:
// transient first, then period repeated forever.
struct Stream {
  std::vector<Elem> transient;
  std::vector<Elem> period;

  const Elem& at(std::size_t n) const;
};

// Class of an eventually periodic sequence modulo eventually trivial ones.
// The word has minimal length P and value(n) = word[n mod P] for all large n.
class Corona {
 public:
  Corona() = default;
  static Corona of(const Stream& s);
  static Corona constant(const Elem& g) { return of(Stream{{}, {g}}); }

  const std::vector<Elem>& word() const { return word_; }
  const Elem& tail(std::size_t n) const { return word_[n % word_.size()]; }

  friend bool operator==(const Corona&, const Corona&) = default;

 private:
  std::vector<Elem> word_;
};

struct LagValue {
  Corona corona;
  long shift = 0;

  friend bool operator==(const LagValue&, const LagValue&) = default;
};

// [alpha, g, beta; basepoint] with basepoint in Z(beta)
struct Germ {
  SgElem s;
  EvPeriodicPath basepoint;
};

class Groupoid {
 public:
  explicit Groupoid(const Triple& t, std::size_t bound = kDefaultBound) : t_(&t), sg_(t), bound_(bound) {}

  const Triple& triple() const { return *t_; }
  const Semigroup& semigroup() const { return sg_; }

  // n -> phi(g, xi|_{n-1})
  Stream phi_stream(const Elem& g, const EvPeriodicPath& xi) const;

  Corona identity() const { return Corona::constant(t_->group().identity()); }
  Corona mul(const Corona& a, const Corona& b) const;
  Corona inv(const Corona& a) const;
  // rho shifts right (rho(g)_n = g_{n-1}); negative powers apply lambda
  Corona rho(const Corona& a, long m) const;

  LagValue mul(const LagValue& a, const LagValue& b) const;
  LagValue inv(const LagValue& a) const;

  Germ germ(const SgElem& s, const EvPeriodicPath& basepoint) const;
  EvPeriodicPath range(const Germ& u) const;
  const EvPeriodicPath& domain(const Germ& u) const { return u.basepoint; }

  bool germ_eq(const Germ& a, const Germ& b) const;
  // equal germ with |beta| = n, resp. |alpha| = n
  Germ normalize_beta(const Germ& u, std::size_t n) const;
  Germ normalize_alpha(const Germ& u, std::size_t n) const;
  Germ compose(const Germ& a, const Germ& b) const;
  Germ invert(const Germ& u) const;

  LagValue lag(const Germ& u) const;
  std::tuple<EvPeriodicPath, LagValue, EvPeriodicPath> f_map(const Germ& u) const;

  // eta_{n+p} = g_{n+p} zeta_{n+q} and g_{n+p+1} = phi(g_{n+p}, zeta_{n+q}) for all n >= 1
  bool satisfies_at(const EvPeriodicPath& eta, const Stream& g, std::size_t p, std::size_t q,
                    const EvPeriodicPath& zeta) const;
  // (eta; c, k; zeta) lies in the range of F
  bool is_groupoid_element(const EvPeriodicPath& eta, const Corona& c, long k, const EvPeriodicPath& zeta) const;

  std::string format(const Germ& u) const;
  std::string format(const Corona& c) const;
  std::string format(const LagValue& l) const;
  std::string format(const EvPeriodicPath& xi) const;
  // "prefix|cycle"
  EvPeriodicPath parse_infinite(std::string_view text) const;
  // "(alpha; g; beta) @ prefix|cycle"
  Germ parse_germ(std::string_view text) const;
  // "t1 t2 | p1 p2" in group element names
  Stream parse_stream(std::string_view text) const;

 private:
  void require_pseudo_free() const;
  EvPeriodicPath prepend(const Path& alpha, const EvPeriodicPath& xi) const;

  const Triple* t_;
  Semigroup sg_;
  std::size_t bound_;
};

}  // namespace ssg
