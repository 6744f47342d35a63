#include "ssg/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "ssg/errors.hpp"
#include "ssg/linear.hpp"

namespace ssg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct StateGraph {
  struct Node {
    Elem h;
    VertexId v;
    std::size_t parent;
    EdgeId via;
    VertexId root;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<EdgeId, std::size_t>>> arcs;
  std::vector<std::vector<EdgeId>> accept;  // edges whose restriction becomes the identity
  std::vector<std::size_t> roots;
  bool truncated = false;
  std::optional<std::pair<std::size_t, std::size_t>> pump;  // ancestor, descendant

  std::vector<EdgeId> tree_edges(std::size_t from, std::size_t to) const {
    std::vector<EdgeId> out;
    for (std::size_t n = to; n != from; n = nodes[n].parent) out.push_back(nodes[n].via);
    std::reverse(out.begin(), out.end());
    return out;
  }
  bool is_ancestor(std::size_t a, std::size_t n) const {
    for (; n != kNone; n = nodes[n].parent)
      if (n == a) return true;
    return false;
  }
};

// States (h, v): the running restriction h sits at vertex v and may take an edge
// e with r(e) = v only when h e = e; the identity restriction is absorbing.
StateGraph explore(const Triple& t, const Elem& g, const std::vector<VertexId>& starts, std::size_t bound) {
  const Graph& E = t.graph();
  const Group& G = t.group();
  StateGraph sg;
  std::map<std::pair<Elem, VertexId>, std::size_t> index;
  auto add = [&](const Elem& h, VertexId v, std::size_t parent, EdgeId via, VertexId root) {
    std::size_t id = sg.nodes.size();
    sg.nodes.push_back({h, v, parent, via, root});
    sg.arcs.emplace_back();
    sg.accept.emplace_back();
    index.emplace(std::make_pair(h, v), id);
    return id;
  };
  for (VertexId x : starts)
    if (!index.count({g, x})) sg.roots.push_back(add(g, x, kNone, 0, x));
  for (std::size_t i = 0; i < sg.nodes.size(); ++i) {
    const Elem h = sg.nodes[i].h;
    const VertexId v = sg.nodes[i].v;
    for (EdgeId e : E.into(v)) {
      if (t.act_edge(h, e) != e) continue;
      Elem h2 = t.phi(h, e);
      if (G.is_identity(h2)) {
        sg.accept[i].push_back(e);
        continue;
      }
      const VertexId u = E.domain(e);
      if (auto it = index.find({h2, u}); it != index.end()) {
        sg.arcs[i].push_back({e, it->second});
        continue;
      }
      if (sg.nodes.size() >= bound) {
        sg.truncated = true;
        continue;
      }
      std::size_t j = add(h2, u, i, e, sg.nodes[i].root);
      sg.arcs[i].push_back({e, j});
      if (!G.is_finite() && !sg.pump) {
        for (std::size_t a = i; a != kNone; a = sg.nodes[a].parent)
          if (sg.nodes[a].v == u && mpz_divisible_p(h2.get_mpz_t(), sg.nodes[a].h.get_mpz_t())) {
            sg.pump = std::make_pair(a, j);
            break;
          }
      }
    }
  }
  return sg;
}

std::vector<bool> coreachable(const StateGraph& sg) {
  const std::size_t n = sg.nodes.size();
  std::vector<std::vector<std::size_t>> rev(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto [e, j] : sg.arcs[i]) rev[j].push_back(i);
  std::vector<bool> ok(n, false);
  std::deque<std::size_t> q;
  for (std::size_t i = 0; i < n; ++i)
    if (!sg.accept[i].empty()) {
      ok[i] = true;
      q.push_back(i);
    }
  while (!q.empty()) {
    auto j = q.front();
    q.pop_front();
    for (auto i : rev[j])
      if (!ok[i]) {
        ok[i] = true;
        q.push_back(i);
      }
  }
  return ok;
}

// shortest continuation from node s to an accepting edge
std::vector<EdgeId> completion_from(const StateGraph& sg, std::size_t s) {
  std::vector<std::size_t> parent(sg.nodes.size(), kNone);
  std::vector<EdgeId> via(sg.nodes.size(), 0);
  std::vector<bool> seen(sg.nodes.size(), false);
  std::deque<std::size_t> q{s};
  seen[s] = true;
  while (!q.empty()) {
    auto i = q.front();
    q.pop_front();
    if (!sg.accept[i].empty()) {
      std::vector<EdgeId> out{sg.accept[i].front()};
      for (auto n = i; n != s; n = parent[n]) out.push_back(via[n]);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (auto [e, j] : sg.arcs[i])
      if (!seen[j]) {
        seen[j] = true;
        parent[j] = i;
        via[j] = e;
        q.push_back(j);
      }
  }
  throw std::logic_error("no completion from a coreachable state");
}

// closed walk from s back to s using only nodes of the same component
std::vector<EdgeId> loop_at(const StateGraph& sg, std::size_t s, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> parent(sg.nodes.size(), kNone);
  std::vector<EdgeId> via(sg.nodes.size(), 0);
  std::vector<bool> seen(sg.nodes.size(), false);
  std::deque<std::size_t> q{s};
  while (!q.empty()) {
    auto i = q.front();
    q.pop_front();
    for (auto [e, j] : sg.arcs[i]) {
      if (comp[j] != comp[s]) continue;
      if (j == s) {
        std::vector<EdgeId> out{e};
        for (auto n = i; n != s; n = parent[n]) out.push_back(via[n]);
        std::reverse(out.begin(), out.end());
        return out;
      }
      if (!seen[j]) {
        seen[j] = true;
        parent[j] = i;
        via[j] = e;
        q.push_back(j);
      }
    }
  }
  throw std::logic_error("no loop inside a cyclic component");
}

std::vector<std::size_t> components(const StateGraph& sg, const std::vector<bool>& keep, std::vector<bool>& cyclic) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i)
    if (keep[i])
      for (auto [e, j] : sg.arcs[i])
        if (keep[j]) pairs.emplace_back(i, j);
  auto comp = strong_components(sg.nodes.size(), pairs);
  cyclic.assign(sg.nodes.size(), false);
  std::map<std::size_t, std::size_t> size;
  for (std::size_t i = 0; i < sg.nodes.size(); ++i)
    if (keep[i]) ++size[comp[i]];
  for (auto [i, j] : pairs)
    if (comp[i] == comp[j] && (i == j || size[comp[i]] > 1)) cyclic[i] = true;
  return comp;
}

}  // namespace

Path PumpWitness::instance(const Graph& E, std::size_t k) const {
  Path p = prefix;
  for (std::size_t i = 0; i < k; ++i) p = E.concat(p, loop);
  return E.concat(p, completion);
}

bool Analyzer::is_strongly_fixed(const Elem& g, const Path& alpha) const {
  const Group& G = t_->group();
  auto [moved, restr] = t_->act_restrict(g, alpha);
  const bool direct = moved == alpha && G.is_identity(restr);
  bool stepwise = t_->act(g, alpha.range()) == alpha.range();
  Elem h = g;
  for (EdgeId e : alpha.edges()) {
    if (!stepwise) break;
    stepwise = t_->act_edge(h, e) == e;
    h = t_->phi(h, e);
  }
  stepwise = stepwise && G.is_identity(h);
  if (direct != stepwise) throw std::logic_error("strongly fixed: path action and automaton disagree");
  return direct;
}

bool Analyzer::is_minimal_strongly_fixed(const Elem& g, const Path& alpha) const {
  if (!is_strongly_fixed(g, alpha)) return false;
  const Group& G = t_->group();
  if (alpha.is_vertex()) return true;
  if (G.is_identity(g)) return false;
  Elem h = g;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    h = t_->phi(h, alpha[i]);
    if (G.is_identity(h)) return false;
  }
  return true;
}

MinFixedSet Analyzer::minimal_strongly_fixed_paths(const Elem& g) const {
  const Graph& E = t_->graph();
  MinFixedSet out;
  if (t_->group().is_identity(g)) {
    for (VertexId x = 0; x < E.num_vertices(); ++x) out.paths.push_back(E.vertex_path(x));
    return out;
  }
  std::vector<VertexId> starts(E.num_vertices());
  for (VertexId x = 0; x < E.num_vertices(); ++x) starts[x] = x;
  const StateGraph sg = explore(*t_, g, starts, bound_);
  const auto co = coreachable(sg);
  std::vector<bool> cyclic;
  const auto comp = components(sg, co, cyclic);
  for (std::size_t s = 0; s < sg.nodes.size(); ++s) {
    if (!cyclic[s]) continue;
    const VertexId root = sg.nodes[s].root;
    std::size_t r = s;
    while (sg.nodes[r].parent != kNone) r = sg.nodes[r].parent;
    PumpWitness w{g, E.path(root, sg.tree_edges(r, s)), E.path(loop_at(sg, s, comp)), {}};
    w.completion = E.path(completion_from(sg, s));
    out.kind = MinFixedSet::Kind::Infinite;
    out.witness = w;
    return out;
  }
  if (sg.pump && co[sg.pump->first]) {
    auto [a, d] = *sg.pump;
    std::size_t r = a;
    while (sg.nodes[r].parent != kNone) r = sg.nodes[r].parent;
    PumpWitness w{g, E.path(sg.nodes[a].root, sg.tree_edges(r, a)), E.path(sg.tree_edges(a, d)), {}};
    w.completion = E.path(completion_from(sg, a));
    out.kind = MinFixedSet::Kind::Infinite;
    out.witness = w;
    return out;
  }
  if (sg.truncated) {
    out.kind = MinFixedSet::Kind::Unknown;
    out.bound = bound_;
    return out;
  }
  // finite: enumerate every route through the (acyclic) coreachable part
  std::vector<EdgeId> trail;
  std::function<void(std::size_t, VertexId)> walk = [&](std::size_t i, VertexId root) {
    for (EdgeId e : sg.accept[i]) {
      trail.push_back(e);
      out.paths.push_back(E.path(root, trail));
      trail.pop_back();
    }
    for (auto [e, j] : sg.arcs[i]) {
      if (!co[j]) continue;
      trail.push_back(e);
      walk(j, root);
      trail.pop_back();
    }
  };
  for (auto r : sg.roots)
    if (co[r]) walk(r, sg.nodes[r].v);
  std::sort(out.paths.begin(), out.paths.end());
  out.paths.erase(std::unique(out.paths.begin(), out.paths.end()), out.paths.end());
  return out;
}

std::vector<std::pair<Elem, EdgeId>> Analyzer::strongly_fixed_edges() const {
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  std::vector<std::pair<Elem, EdgeId>> out;
  if (G.is_finite()) {
    for (const auto& g : G.elements()) {
      if (G.is_identity(g)) continue;
      for (EdgeId e = 0; e < E.num_edges(); ++e)
        if (t_->act_edge(g, e) == e && G.is_identity(t_->phi(g, e))) out.emplace_back(g, e);
    }
  } else {
    // m fixes e iff L_e | m, and then phi(m, e) = (m / L_e) S_e
    for (EdgeId e = 0; e < E.num_edges(); ++e)
      if (kills(e)) out.emplace_back(t_->orbit_length(e), e);
  }
  return out;
}

Truth Analyzer::is_pseudo_free() const { return truth(strongly_fixed_edges().empty()); }

HausdorffResult Analyzer::is_hausdorff() const {
  HausdorffResult res;
  if (is_pseudo_free() == Truth::Yes) {
    res.verdict = Truth::Yes;
    res.method = "pseudo free";
    return res;
  }
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  if (G.is_finite()) {
    res.method = "minimal strongly fixed paths for every group element";
    res.verdict = Truth::Yes;
    for (const auto& g : G.elements()) {
      if (G.is_identity(g)) continue;
      auto m = minimal_strongly_fixed_paths(g);
      if (m.kind == MinFixedSet::Kind::Infinite) {
        res.verdict = Truth::No;
        res.witness = m.witness;
        return res;
      }
      if (m.kind == MinFixedSet::Kind::Unknown) res.verdict = Truth::Unknown;
    }
    return res;
  }
  // Integers: some l has infinitely many minimal strongly fixed paths iff a closed
  // walk of non-killing edges, from which a killing edge is reachable, has an
  // integral product of ratios S_e / L_e.
  res.method = "closed walks with integral ratio";
  const std::size_t nv = E.num_vertices();
  std::vector<bool> co(nv, false);
  std::deque<VertexId> q;
  for (VertexId v = 0; v < nv; ++v)
    for (EdgeId e : E.into(v))
      if (kills(e) && !co[v]) {
        co[v] = true;
        q.push_back(v);
      }
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop_front();
    for (EdgeId e : E.out_of(u))
      if (!kills(e) && !co[E.range(e)]) {
        co[E.range(e)] = true;
        q.push_back(E.range(e));
      }
  }
  std::set<BigInt> primes;
  std::vector<EdgeId> live;
  for (EdgeId e = 0; e < E.num_edges(); ++e) {
    if (kills(e) || !co[E.range(e)] || !co[E.domain(e)]) continue;
    live.push_back(e);
    for (auto& p : prime_divisors(t_->orbit_sum(e))) primes.insert(p);
    for (auto& p : prime_divisors(t_->orbit_length(e))) primes.insert(p);
  }
  std::vector<WeightedArc> arcs;
  for (EdgeId e : live) {
    WeightedArc a{E.range(e), E.domain(e), {}};
    for (const auto& p : primes) a.weight.push_back(valuation(t_->orbit_sum(e), p) - valuation(t_->orbit_length(e), p));
    arcs.push_back(std::move(a));
  }
  auto walk = nonnegative_closed_walk(nv, arcs);
  if (!walk) {
    res.verdict = Truth::Yes;
    return res;
  }
  std::vector<EdgeId> loop;
  for (auto i : *walk) loop.push_back(live[i]);
  const VertexId base = E.range(loop.front());
  // shortest non-killing route from the base to a killing edge
  std::vector<EdgeId> via(nv, 0);
  std::vector<VertexId> parent(nv, nv);
  std::vector<bool> seen(nv, false);
  std::deque<VertexId> bq{base};
  seen[base] = true;
  std::vector<EdgeId> completion;
  while (!bq.empty()) {
    VertexId v = bq.front();
    bq.pop_front();
    auto k = std::find_if(E.into(v).begin(), E.into(v).end(), [&](EdgeId e) { return kills(e); });
    if (k != E.into(v).end()) {
      completion.push_back(*k);
      for (VertexId u = v; u != base; u = parent[u]) completion.push_back(via[u]);
      std::reverse(completion.begin(), completion.end());
      break;
    }
    for (EdgeId e : E.into(v))
      if (!kills(e) && !seen[E.domain(e)]) {
        seen[E.domain(e)] = true;
        parent[E.domain(e)] = v;
        via[E.domain(e)] = e;
        bq.push_back(E.domain(e));
      }
  }
  BigInt l = 1;
  // loop ratios are integral, so zero and one pass bound every pass count
  for (const auto* route : {&loop, &completion}) {
    Rational r = 1;
    for (EdgeId e : *route) {
      Rational need = r / Rational(t_->orbit_length(e));
      l = lcm(l, need.get_den());
      r *= Rational(t_->orbit_sum(e), t_->orbit_length(e));
    }
  }
  PumpWitness w{l, E.vertex_path(base), E.path(loop), E.path(completion)};
  for (std::size_t k = 0; k <= 3; ++k)
    if (!is_minimal_strongly_fixed(l, w.instance(E, k)))
      throw std::logic_error("Hausdorff witness failed to replay");
  res.verdict = Truth::No;
  res.witness = w;
  return res;
}

namespace {

std::vector<std::size_t> orbit_ids(const Triple& t) {
  std::vector<std::size_t> id(t.graph().num_vertices());
  auto orbits = t.vertex_orbits();
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (auto v : orbits[i]) id[v] = i;
  return id;
}

// x >> y both ways: x -> u ~ y and x ~ v -> y
std::vector<std::vector<bool>> dominance(const Triple& t) {
  const Graph& E = t.graph();
  const std::size_t n = E.num_vertices();
  const auto reach = E.reachability();
  const auto orb = orbit_ids(t);
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false)), b = a;
  for (VertexId x = 0; x < n; ++x)
    for (VertexId y = 0; y < n; ++y)
      for (VertexId w = 0; w < n; ++w) {
        if (reach[x][w] && orb[w] == orb[y]) a[x][y] = true;
        if (orb[x] == orb[w] && reach[w][y]) b[x][y] = true;
      }
  if (a != b) throw std::logic_error("the two forms of the dominance relation disagree");
  return a;
}

}  // namespace

bool Analyzer::ggeq(VertexId x, VertexId y) const { return dominance(*t_)[x][y]; }

bool Analyzer::is_g_transitive() const {
  for (const auto& row : dominance(*t_))
    for (bool b : row)
      if (!b) return false;
  return true;
}

bool Analyzer::is_weakly_g_transitive() const {
  const Graph& E = t_->graph();
  const auto dom = dominance(*t_);
  const std::size_t n = E.num_vertices();
  for (VertexId x = 0; x < n; ++x) {
    std::vector<bool> bad(n);
    for (VertexId v = 0; v < n; ++v) bad[v] = !dom[v][x];
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (EdgeId e = 0; e < E.num_edges(); ++e)
      if (bad[E.range(e)] && bad[E.domain(e)]) {
        if (E.range(e) == E.domain(e)) return false;
        pairs.emplace_back(E.range(e), E.domain(e));
      }
    auto comp = strong_components(n, pairs);
    for (auto [a, b] : pairs)
      if (comp[a] == comp[b]) return false;
  }
  return true;
}

std::vector<std::pair<Path, Elem>> Analyzer::iterate_g_circuit(const Elem& g, const Path& gamma, std::size_t n) const {
  if (gamma.is_vertex() || gamma.domain() != t_->act(g, gamma.range()))
    throw Error(ErrorKind::NotGCircuit, "d(gamma) != g r(gamma)");
  std::vector<std::pair<Path, Elem>> out;
  Path c = gamma;
  Elem h = g;
  for (std::size_t k = 0; k < n; ++k) {
    out.emplace_back(c, h);
    auto [moved, restr] = t_->act_restrict(h, c);
    c = moved;
    h = restr;
  }
  return out;
}

EvPeriodicPath Analyzer::canonical_fixed_point(const Elem& g, const Path& gamma, const Path& beta) const {
  const Graph& E = t_->graph();
  if (gamma.is_vertex() || gamma.domain() != t_->act(g, gamma.range()))
    throw Error(ErrorKind::NotGCircuit, "d(gamma) != g r(gamma)");
  if (beta.domain() != gamma.range()) throw Error(ErrorKind::NotComposable, "d(beta) != r(gamma)");
  std::map<std::pair<Path, Elem>, std::size_t> seen;
  std::vector<Path> blocks;
  Path c = gamma;
  Elem h = g;
  while (!seen.count({c, h})) {
    if (blocks.size() >= bound_)
      throw Error(ErrorKind::NotEventuallyPeriodicWithinBound,
                  "circuit iteration did not repeat within " + std::to_string(bound_) + " steps");
    seen.emplace(std::make_pair(c, h), blocks.size());
    blocks.push_back(c);
    auto [moved, restr] = t_->act_restrict(h, c);
    c = moved;
    h = restr;
  }
  const std::size_t start = seen.at({c, h});
  Path head = beta;
  for (std::size_t i = 0; i < start; ++i) head = E.concat(head, blocks[i]);
  Path cyc = blocks[start];
  for (std::size_t i = start + 1; i < blocks.size(); ++i) cyc = E.concat(cyc, blocks[i]);
  return EvPeriodicPath(E, head, cyc);
}

FixedPoints Analyzer::fixed_points_of(const SgElem& s) const {
  if (s.zero) throw Error(ErrorKind::InvalidArgument, "the zero element acts on nothing");
  const Graph& E = t_->graph();
  FixedPoints out;
  if (s.alpha.length() < s.beta.length()) {
    Semigroup S(*t_);
    return fixed_points_of(S.star(s));
  }
  if (s.alpha.length() == s.beta.length()) {
    if (s.alpha != s.beta) return out;
    out.kind = FixedPoints::Kind::Characterized;
    out.base = s.alpha;
    out.g = s.g;
    return out;
  }
  if (!is_prefix(s.beta, s.alpha)) return out;
  const Path gamma = E.suffix(s.alpha, s.beta.length());
  out.kind = FixedPoints::Kind::Unique;
  out.point = canonical_fixed_point(s.g, gamma, s.beta);
  out.isolated = !E.has_entry(gamma);
  out.base = s.beta;
  out.g = s.g;
  return out;
}

std::vector<bool> Analyzer::nonzero_reach(VertexId x) const {
  const Graph& E = t_->graph();
  std::vector<bool> seen(E.num_vertices(), false);
  std::vector<VertexId> stack{x};
  seen[x] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : E.into(v))
      if (!kills(e) && !seen[E.domain(e)]) {
        seen[E.domain(e)] = true;
        stack.push_back(E.domain(e));
      }
  }
  return seen;
}

std::optional<std::size_t> Analyzer::longest_nonzero_walk(VertexId x) const {
  const Graph& E = t_->graph();
  std::vector<int> color(E.num_vertices(), 0);
  std::vector<std::size_t> best(E.num_vertices(), 0);
  bool cycle = false;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    color[v] = 1;
    for (EdgeId e : E.into(v)) {
      if (kills(e) || cycle) continue;
      VertexId u = E.domain(e);
      if (color[u] == 1) {
        cycle = true;
        return;
      }
      if (color[u] == 0) dfs(u);
      best[v] = std::max(best[v], best[u] + 1);
    }
    color[v] = 2;
  };
  dfs(x);
  if (cycle) return std::nullopt;
  return best[x];
}

BigInt Analyzer::cylinder_stabilizer(VertexId x) const {
  if (t_->is_finite()) throw Error(ErrorKind::UnsupportedBackend, "cylinder stabilizer is computed for the integers");
  const Graph& E = t_->graph();
  const auto reach = nonzero_reach(x);
  std::set<BigInt> primes;
  std::vector<EdgeId> moves;  // non-killing edges inside the region
  std::vector<EdgeId> tests;  // every edge whose range lies in the region
  for (EdgeId e = 0; e < E.num_edges(); ++e) {
    if (!reach[E.range(e)]) continue;
    tests.push_back(e);
    for (auto& p : prime_divisors(t_->orbit_length(e))) primes.insert(p);
    if (!kills(e)) {
      moves.push_back(e);
      for (auto& p : prime_divisors(t_->orbit_sum(e))) primes.insert(p);
    }
  }
  BigInt d = 1;
  const long inf = std::numeric_limits<long>::max();
  for (const auto& p : primes) {
    std::vector<long> dist(E.num_vertices(), inf);
    dist[x] = 0;
    auto w = [&](EdgeId e) { return valuation(t_->orbit_sum(e), p) - valuation(t_->orbit_length(e), p); };
    for (std::size_t round = 0; round < E.num_vertices(); ++round) {
      bool changed = false;
      for (EdgeId e : moves) {
        if (dist[E.range(e)] == inf) continue;
        long cand = dist[E.range(e)] + w(e);
        if (cand < dist[E.domain(e)]) {
          dist[E.domain(e)] = cand;
          changed = true;
        }
      }
      if (!changed) break;
      if (round + 1 == E.num_vertices()) return 0;  // a cycle keeps lowering the valuation
    }
    long need = 0;
    for (EdgeId e : tests)
      if (dist[E.range(e)] != inf) need = std::max(need, valuation(t_->orbit_length(e), p) - dist[E.range(e)]);
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(need));
    d *= pk;
  }
  return d;
}

Truth Analyzer::fixes_cylinder(const Elem& g, VertexId x) const {
  const Group& G = t_->group();
  if (G.is_identity(g)) return Truth::Yes;
  if (!G.is_finite()) {
    BigInt d = cylinder_stabilizer(x);
    return truth(d != 0 && mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t()));
  }
  const Graph& E = t_->graph();
  std::set<std::pair<Elem, VertexId>> seen{{g, x}};
  std::vector<std::pair<Elem, VertexId>> stack{{g, x}};
  while (!stack.empty()) {
    auto [h, v] = stack.back();
    stack.pop_back();
    for (EdgeId e : E.into(v)) {
      if (t_->act_edge(h, e) != e) return Truth::No;
      Elem h2 = t_->phi(h, e);
      if (G.is_identity(h2)) continue;
      if (seen.insert({h2, E.domain(e)}).second) stack.push_back({h2, E.domain(e)});
    }
  }
  return Truth::Yes;
}

SlackResult Analyzer::is_slack(const Elem& g, VertexId x) const {
  const Group& G = t_->group();
  SlackResult res;
  if (G.is_identity(g)) {
    res.verdict = Truth::Yes;
    res.depth = 0;
    return res;
  }
  Truth fixes = fixes_cylinder(g, x);
  if (fixes != Truth::Yes) {
    res.verdict = fixes == Truth::No ? Truth::No : Truth::Unknown;
    return res;
  }
  if (!G.is_finite()) {
    auto longest = longest_nonzero_walk(x);
    res.verdict = truth(longest.has_value());
    if (longest) res.depth = *longest + 1;
    return res;
  }
  // every state reachable from (g, x) fixes its edges; slack iff no cycle avoids the identity
  const StateGraph sg = explore(*t_, g, {x}, bound_);
  std::vector<int> color(sg.nodes.size(), 0);
  std::vector<std::size_t> best(sg.nodes.size(), 0);
  bool cycle = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    color[i] = 1;
    for (auto [e, j] : sg.arcs[i]) {
      if (cycle) return;
      if (color[j] == 1) {
        cycle = true;
        return;
      }
      if (color[j] == 0) dfs(j);
      best[i] = std::max(best[i], best[j] + 1);
    }
    color[i] = 2;
  };
  dfs(sg.roots.front());
  res.verdict = truth(!cycle);
  if (!cycle) res.depth = best[sg.roots.front()] + 1;
  return res;
}

TopFreeResult Analyzer::is_topologically_free() const {
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  TopFreeResult res;
  res.entryless_circuits = E.circuits_without_entry();
  if (G.is_finite()) {
    for (const auto& g : G.elements()) {
      if (G.is_identity(g)) continue;
      for (VertexId x = 0; x < E.num_vertices(); ++x) {
        if (fixes_cylinder(g, x) != Truth::Yes) continue;
        auto s = is_slack(g, x);
        if (s.verdict == Truth::No) res.non_slack.emplace_back(g, x);
        if (s.verdict == Truth::Unknown) res.undecided.emplace_back(g, x);
      }
    }
  } else {
    // {l : l fixes Z(x)} = dZ, and slackness does not depend on which nonzero l is used
    for (VertexId x = 0; x < E.num_vertices(); ++x) {
      BigInt d = cylinder_stabilizer(x);
      if (d == 0) continue;
      if (is_slack(d, x).verdict == Truth::No) res.non_slack.emplace_back(d, x);
    }
  }
  if (!res.entryless_circuits.empty() || !res.non_slack.empty())
    res.verdict = Truth::No;
  else
    res.verdict = res.undecided.empty() ? Truth::Yes : Truth::Unknown;
  return res;
}

std::vector<CylinderWitness> Analyzer::fixed_cylinders() const {
  const Graph& E = t_->graph();
  const Group& G = t_->group();
  std::vector<CylinderWitness> out;
  for (auto& [g, e] : strongly_fixed_edges()) out.push_back({g, E.edge_path(e)});
  if (G.is_finite()) {
    for (const auto& g : G.elements()) {
      if (G.is_identity(g)) continue;
      for (VertexId x = 0; x < E.num_vertices(); ++x)
        if (fixes_cylinder(g, x) == Truth::Yes) out.push_back({g, E.vertex_path(x)});
    }
  } else {
    for (VertexId x = 0; x < E.num_vertices(); ++x) {
      BigInt d = cylinder_stabilizer(x);
      if (d != 0) out.push_back({d, E.vertex_path(x)});
    }
  }
  return out;
}

Report Analyzer::analyze() const {
  Report r;
  r.bound = bound_;
  r.strongly_fixed_edges = strongly_fixed_edges();
  r.pseudo_free = truth(r.strongly_fixed_edges.empty());
  r.hausdorff = is_hausdorff();
  r.weakly_g_transitive = is_weakly_g_transitive();
  r.g_transitive = is_g_transitive();
  r.condition_l = is_locally_contracting();
  r.topologically_free = is_topologically_free();
  r.essentially_principal = r.topologically_free.verdict;
  r.fixed_cylinders = fixed_cylinders();
  r.group_action_free = truth(r.fixed_cylinders.empty());
  r.amenable_note = t_->is_finite() ? "G is finite, hence amenable; the tight groupoid is amenable"
                                    : "G = Z is amenable; the tight groupoid is amenable";
  r.nuclear_note = "G is amenable, so the algebra O_{G,E} is nuclear";
  if (r.hausdorff.verdict != Truth::Yes) {
    r.simple = Truth::Unknown;
    r.purely_infinite_simple = Truth::Unknown;
    r.simple_reason = "tight groupoid not known to be Hausdorff; the simplicity criterion does not apply";
  } else {
    std::vector<std::string> failed;
    if (!r.weakly_g_transitive) failed.push_back("not weakly G-transitive");
    if (!r.condition_l) failed.push_back("some circuit has no entry");
    Truth slack = truth(r.topologically_free.non_slack.empty());
    if (slack == Truth::Yes && !r.topologically_free.undecided.empty()) slack = Truth::Unknown;
    if (slack == Truth::No) failed.push_back("some nontrivial element fixes a cylinder without being slack there");
    if (!failed.empty()) {
      r.simple = Truth::No;
      for (std::size_t i = 0; i < failed.size(); ++i) r.simple_reason += (i ? "; " : "") + failed[i];
    } else if (slack == Truth::Unknown) {
      r.simple = Truth::Unknown;
      r.simple_reason = "slackness undecided within bound " + std::to_string(bound_);
    } else {
      r.simple = Truth::Yes;
      r.simple_reason = "Hausdorff, weakly G-transitive, every circuit has an entry, slackness holds";
    }
    r.purely_infinite_simple = r.simple;
  }
  if (r.essentially_principal == Truth::Yes)
    r.projection_note = "essentially principal: every nonzero hereditary subalgebra contains an infinite projection";
  return r;
}

Truth is_e_star_unitary(const Triple& t, std::size_t path_bound) {
  Analyzer a(t);
  const Truth verdict = a.is_pseudo_free();
  const Truth search = Semigroup(t).search_e_star_unitary(path_bound);
  if (search == Truth::No && verdict == Truth::Yes)
    throw std::logic_error("a non-idempotent dominates an idempotent in a pseudo free triple");
  if (t.is_finite() && verdict == Truth::No && search == Truth::Yes)
    throw std::logic_error("strongly fixed edge not found by direct search");
  return verdict;
}

}  // namespace ssg
