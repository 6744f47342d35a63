#include "ssg/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n");
  auto e = s.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Elem> minimal_word(std::vector<Elem> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) {
      w.resize(p);
      break;
    }
  }
  return w;
}

std::size_t mod(long a, std::size_t m) {
  long r = a % static_cast<long>(m);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(m) : r);
}

}  // namespace

const Elem& Stream::at(std::size_t n) const {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "streams are indexed from 1");
  if (n <= transient.size()) return transient[n - 1];
  return period[(n - 1 - transient.size()) % period.size()];
}

Corona Corona::of(const Stream& s) {
  if (s.period.empty()) throw Error(ErrorKind::InvalidArgument, "stream period must be nonempty");
  const auto p = minimal_word(s.period);
  Corona c;
  c.word_.resize(p.size());
  const std::size_t t = s.transient.size();
  for (std::size_t k = 0; k < p.size(); ++k) c.word_[k] = p[mod(static_cast<long>(k) - static_cast<long>(t) - 1, p.size())];
  return c;
}

Stream Groupoid::phi_stream(const Elem& g, const EvPeriodicPath& xi) const {
  if (!t_->group().contains(g)) throw Error(ErrorKind::InvalidArgument, "group element out of range");
  const std::size_t pre = xi.prefix().size();
  const std::size_t cyc = xi.cycle().size();
  std::vector<Elem> vals{g};
  for (std::size_t n = 1; n <= pre; ++n) vals.push_back(t_->phi(vals.back(), xi.at(n)));
  // vals[n-1] is the n-th term; from n = pre + 1 on the state is (term, phase of xi_n)
  std::map<std::pair<Elem, std::size_t>, std::size_t> seen;
  for (std::size_t n = pre + 1;; ++n) {
    auto key = std::make_pair(vals[n - 1], (n - 1 - pre) % cyc);
    if (auto it = seen.find(key); it != seen.end()) {
      Stream s;
      s.transient.assign(vals.begin(), vals.begin() + (it->second - 1));
      s.period.assign(vals.begin() + (it->second - 1), vals.begin() + (n - 1));
      return s;
    }
    if (seen.size() >= bound_ * cyc)
      throw Error(ErrorKind::NotEventuallyPeriodicWithinBound,
                  "restriction stream did not repeat within " + std::to_string(bound_) + " periods");
    seen.emplace(key, n);
    vals.push_back(t_->phi(vals[n - 1], xi.at(n)));
  }
}

Corona Groupoid::mul(const Corona& a, const Corona& b) const {
  const std::size_t n = std::lcm(a.word().size(), b.word().size());
  Stream s;
  for (std::size_t k = 0; k < n; ++k) s.period.push_back(t_->group().mul(a.tail(k), b.tail(k)));
  // period anchored at phase 0: value(n) = period[(n - 1) mod len], so rotate by one
  std::rotate(s.period.begin(), s.period.begin() + 1, s.period.end());
  return Corona::of(s);
}

Corona Groupoid::inv(const Corona& a) const {
  Stream s;
  for (std::size_t k = 0; k < a.word().size(); ++k) s.period.push_back(t_->group().inv(a.tail(k)));
  std::rotate(s.period.begin(), s.period.begin() + 1, s.period.end());
  return Corona::of(s);
}

Corona Groupoid::rho(const Corona& a, long m) const {
  const std::size_t n = a.word().size();
  Stream s;
  for (std::size_t k = 0; k < n; ++k) s.period.push_back(a.tail(mod(static_cast<long>(k) + 1 - m, n)));
  return Corona::of(s);
}

LagValue Groupoid::mul(const LagValue& a, const LagValue& b) const {
  return {mul(a.corona, rho(b.corona, a.shift)), a.shift + b.shift};
}

LagValue Groupoid::inv(const LagValue& a) const { return {rho(inv(a.corona), -a.shift), -a.shift}; }

void Groupoid::require_pseudo_free() const {
  if (Analyzer(*t_, bound_).is_pseudo_free() != Truth::Yes)
    throw Error(ErrorKind::NotPseudoFree, "germ criteria are only available for pseudo free triples");
}

EvPeriodicPath Groupoid::prepend(const Path& alpha, const EvPeriodicPath& xi) const {
  const Graph& E = t_->graph();
  const Path tail = E.path(xi.range(), xi.prefix());
  return EvPeriodicPath(E, E.concat(alpha, tail), E.path(xi.cycle()));
}

Germ Groupoid::germ(const SgElem& s, const EvPeriodicPath& basepoint) const {
  if (s.zero) throw Error(ErrorKind::InvalidArgument, "germs need a nonzero semigroup element");
  if (s.owner != t_->id()) throw Error(ErrorKind::MixedTriples, "element belongs to a different triple");
  if (!basepoint.starts_with(s.beta))
    throw Error(ErrorKind::InvalidArgument, "basepoint " + format(basepoint) + " is not in Z(" + t_->graph().format(s.beta) + ")");
  return {s, basepoint};
}

EvPeriodicPath Groupoid::range(const Germ& u) const {
  const EvPeriodicPath xi = u.basepoint.drop(t_->graph(), u.s.beta.length());
  return prepend(u.s.alpha, t_->act_infinite(u.s.g, xi, bound_));
}

bool Groupoid::germ_eq(const Germ& a, const Germ& b) const {
  require_pseudo_free();
  if (a.s.owner != b.s.owner) throw Error(ErrorKind::MixedTriples, "germs over different triples");
  if (a.basepoint != b.basepoint) return false;
  const Germ& u = a.s.beta.length() <= b.s.beta.length() ? a : b;
  const Germ& v = a.s.beta.length() <= b.s.beta.length() ? b : a;
  if (!is_prefix(u.s.beta, v.s.beta)) return false;
  const Graph& E = t_->graph();
  const Path gamma = E.suffix(v.s.beta, u.s.beta.length());
  auto [moved, restr] = t_->act_restrict(u.s.g, gamma);
  return v.s.alpha == E.concat(u.s.alpha, moved) && v.s.g == restr;
}

Germ Groupoid::normalize_beta(const Germ& u, std::size_t n) const {
  const Graph& E = t_->graph();
  if (n < u.s.beta.length()) throw Error(ErrorKind::InvalidArgument, "cannot shorten beta");
  const Path head = u.basepoint.truncate(E, n);
  const Path gamma = E.suffix(head, u.s.beta.length());
  auto [moved, restr] = t_->act_restrict(u.s.g, gamma);
  return {sg_.make(E.concat(u.s.alpha, moved), restr, head), u.basepoint};
}

Germ Groupoid::normalize_alpha(const Germ& u, std::size_t n) const {
  if (n < u.s.alpha.length()) throw Error(ErrorKind::InvalidArgument, "cannot shorten alpha");
  return normalize_beta(u, u.s.beta.length() + (n - u.s.alpha.length()));
}

Germ Groupoid::compose(const Germ& a, const Germ& b) const {
  if (a.basepoint != range(b))
    throw Error(ErrorKind::NotComposableGerms, "d(u1) = " + format(a.basepoint) + " but r(u2) = " + format(range(b)));
  const std::size_t n = std::max(a.s.beta.length(), b.s.alpha.length());
  const Germ u = normalize_beta(a, n);
  const Germ v = normalize_alpha(b, n);
  if (u.s.beta != v.s.alpha) throw std::logic_error("aligned germ representatives disagree");
  return {sg_.make(u.s.alpha, t_->group().mul(u.s.g, v.s.g), v.s.beta), v.basepoint};
}

Germ Groupoid::invert(const Germ& u) const { return {sg_.star(u.s), range(u)}; }

LagValue Groupoid::lag(const Germ& u) const {
  require_pseudo_free();
  const EvPeriodicPath xi = u.basepoint.drop(t_->graph(), u.s.beta.length());
  const Corona c = Corona::of(phi_stream(u.s.g, xi));
  const long a = static_cast<long>(u.s.alpha.length());
  return {rho(c, a), a - static_cast<long>(u.s.beta.length())};
}

std::tuple<EvPeriodicPath, LagValue, EvPeriodicPath> Groupoid::f_map(const Germ& u) const {
  return {range(u), lag(u), u.basepoint};
}

bool Groupoid::satisfies_at(const EvPeriodicPath& eta, const Stream& g, std::size_t p, std::size_t q,
                            const EvPeriodicPath& zeta) const {
  const std::size_t settle = std::max({g.transient.size(), eta.prefix().size(), zeta.prefix().size()}) + 1;
  const std::size_t span = std::lcm(std::lcm(g.period.size(), eta.cycle().size()), zeta.cycle().size());
  for (std::size_t n = 1; n <= settle + span; ++n) {
    const Elem& h = g.at(n + p);
    const EdgeId z = zeta.at(n + q);
    if (eta.at(n + p) != t_->act_edge(h, z)) return false;
    if (g.at(n + p + 1) != t_->phi(h, z)) return false;
  }
  return true;
}

bool Groupoid::is_groupoid_element(const EvPeriodicPath& eta, const Corona& c, long k, const EvPeriodicPath& zeta) const {
  // past every transient the class is represented by its anchored word, and
  // the conditions only get weaker as (p, q) grow together
  const std::size_t t = eta.prefix().size() + zeta.prefix().size() + 1;
  const std::size_t p = static_cast<std::size_t>(std::max(k, 0L)) + t;
  const std::size_t q = static_cast<std::size_t>(static_cast<long>(p) - k);
  Stream s;
  for (std::size_t i = 0; i < c.word().size(); ++i) s.period.push_back(c.tail(i + 1));
  return satisfies_at(eta, s, p, q, zeta);
}

std::string Groupoid::format(const EvPeriodicPath& xi) const {
  const Graph& E = t_->graph();
  std::string pre = xi.prefix().empty() ? "" : E.format(E.path(xi.range(), xi.prefix()));
  return pre + "|" + E.format(E.path(xi.cycle()));
}

std::string Groupoid::format(const Germ& u) const {
  return "[" + sg_.format(u.s).substr(1, sg_.format(u.s).size() - 2) + "; " + format(u.basepoint) + "]";
}

std::string Groupoid::format(const Corona& c) const {
  std::string s = "[";
  for (std::size_t i = 0; i < c.word().size(); ++i) s += (i ? " " : "") + t_->group().name(c.word()[i]);
  return s + "]";
}

std::string Groupoid::format(const LagValue& l) const { return "(" + format(l.corona) + ", " + std::to_string(l.shift) + ")"; }

EvPeriodicPath Groupoid::parse_infinite(std::string_view text) const {
  const Graph& E = t_->graph();
  const std::string s = trim(text);
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw Error(ErrorKind::Parse, "infinite path literal must look like 'prefix|cycle'");
  const std::string pre = trim(std::string_view(s).substr(0, bar));
  const Path cycle = E.parse_path(std::string_view(s).substr(bar + 1));
  const Path prefix = pre.empty() ? E.vertex_path(cycle.range()) : E.parse_path(pre);
  return EvPeriodicPath(E, prefix, cycle);
}

Germ Groupoid::parse_germ(std::string_view text) const {
  const std::string s = trim(text);
  const auto at = s.find('@');
  if (at == std::string::npos) throw Error(ErrorKind::Parse, "germ literal must look like '(alpha; g; beta) @ prefix|cycle'");
  return germ(sg_.parse(std::string_view(s).substr(0, at)), parse_infinite(std::string_view(s).substr(at + 1)));
}

Stream Groupoid::parse_stream(std::string_view text) const {
  const std::string s = trim(text);
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw Error(ErrorKind::Parse, "stream literal must look like 'transient | period'");
  auto read = [&](std::string_view part) {
    std::istringstream in{std::string(part)};
    std::vector<Elem> out;
    for (std::string tok; in >> tok;) out.push_back(t_->group().parse(tok));
    return out;
  };
  Stream st{read(std::string_view(s).substr(0, bar)), read(std::string_view(s).substr(bar + 1))};
  if (st.period.empty()) throw Error(ErrorKind::Parse, "stream period must be nonempty");
  return st;
}

}  // namespace ssg
