#include "ssg/semigroup.hpp"

#include <algorithm>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void Semigroup::check_owner(const SgElem& s) const {
  if (s.owner != t_->id()) throw Error(ErrorKind::MixedTriples, "element belongs to a different triple");
}

SgElem Semigroup::zero() const {
  SgElem z;
  z.owner = t_->id();
  return z;
}

SgElem Semigroup::make(const Path& alpha, const Elem& g, const Path& beta) const {
  if (!t_->group().contains(g)) throw Error(ErrorKind::InvalidArgument, "group element out of range");
  if (alpha.domain() != t_->act(g, beta.domain()))
    throw Error(ErrorKind::InvalidArgument, "d(alpha) != g d(beta) for (" + t_->graph().format(alpha) + "; " +
                                                t_->group().name(g) + "; " + t_->graph().format(beta) + ")");
  SgElem s;
  s.zero = false;
  s.alpha = alpha;
  s.g = g;
  s.beta = beta;
  s.owner = t_->id();
  return s;
}

SgElem Semigroup::mul(const SgElem& s, const SgElem& t) const {
  check_owner(s);
  check_owner(t);
  if (s.zero || t.zero) return zero();
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  if (is_prefix(s.beta, t.alpha)) {
    const Path eps = E.suffix(t.alpha, s.beta.length());
    auto [moved, restr] = t_->act_restrict(s.g, eps);
    return make(E.concat(s.alpha, moved), G.mul(restr, t.g), t.beta);
  }
  if (is_prefix(t.alpha, s.beta)) {
    const Path eps = E.suffix(s.beta, t.alpha.length());
    auto [moved, restr] = t_->act_restrict(G.inv(t.g), eps);
    return make(s.alpha, G.mul(s.g, G.inv(restr)), E.concat(t.beta, moved));
  }
  return zero();
}

SgElem Semigroup::star(const SgElem& s) const {
  check_owner(s);
  if (s.zero) return s;
  return make(s.beta, t_->group().inv(s.g), s.alpha);
}

bool Semigroup::is_idempotent(const SgElem& s) const {
  check_owner(s);
  return s.zero || (s.alpha == s.beta && t_->group().is_identity(s.g));
}

SgElem Semigroup::idempotent_meet(const SgElem& e, const SgElem& f) const {
  if (!is_idempotent(e) || !is_idempotent(f)) throw Error(ErrorKind::InvalidArgument, "idempotents expected");
  if (e.zero || f.zero) return zero();
  if (is_prefix(f.alpha, e.alpha)) return e;
  if (is_prefix(e.alpha, f.alpha)) return f;
  return zero();
}

bool Semigroup::leq_idem(const SgElem& e, const SgElem& f) const {
  if (!is_idempotent(e) || !is_idempotent(f)) throw Error(ErrorKind::InvalidArgument, "idempotents expected");
  if (e.zero) return true;
  if (f.zero) return false;
  return is_prefix(f.alpha, e.alpha);
}

bool Semigroup::leq(const SgElem& s, const SgElem& t) const { return s == mul(t, mul(star(s), s)); }

bool Semigroup::dominates(const SgElem& s, const SgElem& e) const {
  check_owner(s);
  check_owner(e);
  if (e.zero || !is_idempotent(e)) throw Error(ErrorKind::InvalidArgument, "a nonzero idempotent is expected");
  if (s.zero) return false;
  if (s.alpha != s.beta || !is_prefix(s.alpha, e.alpha)) return false;
  const Path tau = t_->graph().suffix(e.alpha, s.alpha.length());
  auto [moved, restr] = t_->act_restrict(s.g, tau);
  return moved == tau && t_->group().is_identity(restr);
}

Truth Semigroup::search_e_star_unitary(std::size_t path_bound, long group_bound) const {
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  std::vector<Elem> gs;
  if (G.is_finite()) {
    gs = G.elements();
  } else {
    for (long k = -group_bound; k <= group_bound; ++k) gs.emplace_back(k);
  }
  std::vector<Path> bases;
  for (VertexId x = 0; x < E.num_vertices(); ++x) bases.push_back(E.vertex_path(x));
  for (EdgeId e = 0; e < E.num_edges(); ++e) bases.push_back(E.edge_path(e));
  for (const auto& alpha : bases)
    for (const auto& g : gs) {
      if (G.is_identity(g) || t_->act(g, alpha.domain()) != alpha.domain()) continue;
      const SgElem s = make(alpha, g, alpha);
      for (std::size_t k = 0; k <= path_bound; ++k)
        for (const auto& tau : E.paths_from(alpha.domain(), k)) {
          const SgElem e = idempotent(E.concat(alpha, tau));
          if (mul(s, e) == e) return Truth::No;
        }
    }
  return Truth::Yes;
}

bool Semigroup::is_cover(const std::vector<SgElem>& family, const SgElem& f) const {
  if (f.zero || !is_idempotent(f)) throw Error(ErrorKind::InvalidArgument, "a nonzero idempotent is expected");
  const Graph& E = t_->graph();
  std::vector<Path> tails;
  std::size_t longest = 0;
  for (const auto& m : family) {
    if (m.zero || !is_idempotent(m)) throw Error(ErrorKind::InvalidArgument, "cover members must be nonzero idempotents");
    check_owner(m);
    if (is_prefix(m.alpha, f.alpha)) return true;  // f <= m
    if (is_prefix(f.alpha, m.alpha)) {
      tails.push_back(E.suffix(m.alpha, f.alpha.length()));
      longest = std::max(longest, tails.back().length());
    }
  }
  if (tails.empty()) return false;
  for (const auto& delta : E.paths_from(f.alpha.domain(), longest)) {
    bool hit = std::any_of(tails.begin(), tails.end(), [&](const Path& g) { return is_prefix(g, delta); });
    if (!hit) return false;
  }
  return true;
}

std::string Semigroup::format(const SgElem& s) const {
  if (s.zero) return "0";
  const Graph& E = t_->graph();
  return "(" + E.format(s.alpha) + "; " + t_->group().name(s.g) + "; " + E.format(s.beta) + ")";
}

SgElem Semigroup::parse(std::string_view text) const {
  std::string s = trim(text);
  if (s == "0") return zero();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorKind::Parse, "semigroup literal must look like (alpha; g; beta): '" + s + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ';') {
      parts.push_back(trim(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  if (parts.size() != 3) throw Error(ErrorKind::Parse, "semigroup literal needs three ';'-separated fields");
  const Graph& E = t_->graph();
  return make(E.parse_path(parts[0]), t_->group().parse(parts[1]), E.parse_path(parts[2]));
}

}  // namespace ssg
