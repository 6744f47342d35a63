#include "ssg/triple.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

std::atomic<std::uint64_t> next_triple_id{1};

std::vector<EdgeId> primitive_root(const std::vector<EdgeId>& c) {
  const std::size_t n = c.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = c[i] == c[i - p];
    if (periodic) return {c.begin(), c.begin() + p};
  }
  return c;
}

template <class T>
bool is_permutation_of_range(const std::vector<T>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto x : v) {
    if (x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

void cycles_of(const std::vector<std::size_t>& perm, std::vector<std::vector<std::size_t>>& cycles,
               std::vector<std::size_t>& cycle_of, std::vector<std::size_t>& pos) {
  const std::size_t n = perm.size();
  cycle_of.assign(n, n);
  pos.assign(n, 0);
  cycles.clear();
  for (std::size_t s = 0; s < n; ++s) {
    if (cycle_of[s] != n) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t v = s; cycle_of[v] == n; v = perm[v]) {
      cycle_of[v] = cycles.size();
      pos[v] = cyc.size();
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
  }
}

std::size_t shift_position(std::size_t pos, const Elem& m, std::size_t len) {
  BigInt q, r;
  floor_divmod(BigInt(static_cast<unsigned long>(pos)) + m, BigInt(static_cast<unsigned long>(len)), q, r);
  return r.get_ui();
}

}  // namespace

EvPeriodicPath::EvPeriodicPath(const Graph& g, const Path& prefix, const Path& cycle) {
  if (cycle.is_vertex()) throw Error(ErrorKind::InvalidArgument, "the periodic part must be nonempty");
  if (!g.is_circuit(cycle)) throw Error(ErrorKind::NotComposable, "periodic part '" + g.format(cycle) + "' is not a circuit");
  if (prefix.domain() != cycle.range())
    throw Error(ErrorKind::NotComposable, "prefix '" + g.format(prefix) + "' does not end where the cycle starts");
  r_ = prefix.range();
  prefix_ = prefix.edges();
  cycle_ = primitive_root(cycle.edges());
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
    prefix_.pop_back();
  }
}

EdgeId EvPeriodicPath::at(std::size_t n) const {
  if (n <= prefix_.size()) return prefix_[n - 1];
  return cycle_[(n - 1 - prefix_.size()) % cycle_.size()];
}

Path EvPeriodicPath::truncate(const Graph& g, std::size_t n) const {
  std::vector<EdgeId> edges;
  edges.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) edges.push_back(at(k));
  return g.path(r_, edges);
}

EvPeriodicPath EvPeriodicPath::drop(const Graph& g, std::size_t n) const {
  std::vector<EdgeId> pre, cyc;
  if (n < prefix_.size()) {
    pre.assign(prefix_.begin() + n, prefix_.end());
    cyc = cycle_;
  } else {
    std::size_t k = (n - prefix_.size()) % cycle_.size();
    cyc.assign(cycle_.begin() + k, cycle_.end());
    cyc.insert(cyc.end(), cycle_.begin(), cycle_.begin() + k);
  }
  Path c = g.path(cyc);
  return EvPeriodicPath(g, pre.empty() ? g.vertex_path(c.range()) : g.path(pre), c);
}

bool EvPeriodicPath::starts_with(const Path& p) const {
  if (p.range() != r_) return false;
  for (std::size_t k = 0; k < p.length(); ++k)
    if (at(k + 1) != p[k]) return false;
  return true;
}

Triple::Triple(Graph graph, Group group)
    : graph_(std::move(graph)), group_(std::move(group)), id_(next_triple_id++) {}

Triple Triple::finite(Graph graph, Group group, std::vector<std::vector<VertexId>> vertex_perm,
                      std::vector<std::vector<EdgeId>> edge_perm, std::vector<std::vector<Elem>> phi) {
  if (!group.is_finite()) throw Error(ErrorKind::InvalidArgument, "finite triple needs a finite group");
  Triple t(std::move(graph), std::move(group));
  const std::size_t n = t.group_.order();
  if (vertex_perm.size() != n || edge_perm.size() != n || phi.size() != n)
    throw Error(ErrorKind::InvalidArgument, "action and cocycle tables need one row per group element");
  for (std::size_t g = 0; g < n; ++g) {
    if (!is_permutation_of_range(vertex_perm[g], t.graph_.num_vertices()))
      throw Error(ErrorKind::NotAutomorphism, "vertex action of '" + t.group_.names()[g] + "' is not a bijection");
    if (!is_permutation_of_range(edge_perm[g], t.graph_.num_edges()))
      throw Error(ErrorKind::NotAutomorphism, "edge action of '" + t.group_.names()[g] + "' is not a bijection");
    if (phi[g].size() != t.graph_.num_edges())
      throw Error(ErrorKind::InvalidArgument, "cocycle row of '" + t.group_.names()[g] + "' has wrong length");
    for (const auto& h : phi[g])
      if (!t.group_.contains(h)) throw Error(ErrorKind::InvalidArgument, "cocycle value outside the group");
  }
  t.vperm_ = std::move(vertex_perm);
  t.eperm_ = std::move(edge_perm);
  t.phi_ = std::move(phi);
  return t;
}

Triple Triple::integers(Graph graph, std::vector<VertexId> sigma1_vertices, std::vector<EdgeId> sigma1_edges,
                        std::vector<BigInt> phi1, std::optional<KatsuraData> katsura) {
  Triple t(std::move(graph), Group::integers());
  if (!is_permutation_of_range(sigma1_vertices, t.graph_.num_vertices()))
    throw Error(ErrorKind::NotAutomorphism, "generator vertex action is not a bijection");
  if (!is_permutation_of_range(sigma1_edges, t.graph_.num_edges()))
    throw Error(ErrorKind::NotAutomorphism, "generator edge action is not a bijection");
  if (phi1.size() != t.graph_.num_edges()) throw Error(ErrorKind::InvalidArgument, "phi1 needs one value per edge");
  t.vperm_ = {std::move(sigma1_vertices)};
  t.eperm_ = {std::move(sigma1_edges)};
  t.phi1_ = std::move(phi1);
  t.katsura_ = std::move(katsura);
  t.index_integer_orbits();
  return t;
}

void Triple::index_integer_orbits() {
  cycles_of(vperm_[0], vcycles_, vcycle_of_, vpos_);
  cycles_of(eperm_[0], ecycles_, ecycle_of_, epos_);
  ecycle_prefix_.clear();
  for (const auto& cyc : ecycles_) {
    std::vector<BigInt> pre{0};
    for (EdgeId e : cyc) pre.push_back(pre.back() + phi1_[e]);
    ecycle_prefix_.push_back(std::move(pre));
  }
  orbit_len_.assign(graph_.num_edges(), 0);
  orbit_sum_.assign(graph_.num_edges(), 0);
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
    const auto c = ecycle_of_[e];
    orbit_len_[e] = static_cast<unsigned long>(ecycles_[c].size());
    orbit_sum_[e] = ecycle_prefix_[c].back();
  }
}

VertexId Triple::act(const Elem& g, VertexId x) const {
  if (is_finite()) return vperm_[group_.index(g)][x];
  const auto& cyc = vcycles_[vcycle_of_[x]];
  return cyc[shift_position(vpos_[x], g, cyc.size())];
}

EdgeId Triple::act_edge(const Elem& g, EdgeId e) const {
  if (is_finite()) return eperm_[group_.index(g)][e];
  const auto& cyc = ecycles_[ecycle_of_[e]];
  return cyc[shift_position(epos_[e], g, cyc.size())];
}

Elem Triple::phi(const Elem& g, EdgeId e) const {
  if (is_finite()) return phi_[group_.index(g)][e];
  // phi(m, e) = F(p + m) - F(p) with F(n) = floor(n/L) S + (partial sum up to n mod L)
  const auto c = ecycle_of_[e];
  const auto& pre = ecycle_prefix_[c];
  const BigInt len = static_cast<unsigned long>(ecycles_[c].size());
  const BigInt& total = pre.back();
  BigInt q, r;
  floor_divmod(BigInt(static_cast<unsigned long>(epos_[e])) + g, len, q, r);
  return q * total + pre[r.get_ui()] - pre[epos_[e]];
}

std::pair<Path, Elem> Triple::act_restrict(const Elem& g, const Path& p) const {
  if (p.is_vertex()) return {graph_.vertex_path(act(g, p.range())), g};
  std::vector<EdgeId> out;
  out.reserve(p.length());
  Elem h = g;
  for (EdgeId e : p.edges()) {
    out.push_back(act_edge(h, e));
    h = phi(h, e);
  }
  return {graph_.path(out), h};
}

Path Triple::act(const Elem& g, const Path& p) const { return act_restrict(g, p).first; }

Elem Triple::cocycle(const Elem& g, const Path& p) const { return act_restrict(g, p).second; }

EvPeriodicPath Triple::act_infinite(const Elem& g, const EvPeriodicPath& xi, std::size_t bound) const {
  std::vector<EdgeId> head;
  Elem h = g;
  for (EdgeId e : xi.prefix()) {
    head.push_back(act_edge(h, e));
    h = phi(h, e);
  }
  std::map<Elem, std::size_t> seen;
  std::vector<std::vector<EdgeId>> blocks;
  while (!seen.count(h)) {
    if (blocks.size() >= bound)
      throw Error(ErrorKind::NotEventuallyPeriodicWithinBound,
                  "restriction states did not repeat within " + std::to_string(bound) + " blocks");
    seen.emplace(h, blocks.size());
    std::vector<EdgeId> out;
    for (EdgeId e : xi.cycle()) {
      out.push_back(act_edge(h, e));
      h = phi(h, e);
    }
    blocks.push_back(std::move(out));
  }
  const std::size_t start = seen.at(h);
  for (std::size_t i = 0; i < start; ++i) head.insert(head.end(), blocks[i].begin(), blocks[i].end());
  std::vector<EdgeId> cyc;
  for (std::size_t i = start; i < blocks.size(); ++i) cyc.insert(cyc.end(), blocks[i].begin(), blocks[i].end());
  const VertexId r = act(g, xi.range());
  return EvPeriodicPath(graph_, graph_.path(r, head), graph_.path(cyc));
}

std::vector<std::vector<VertexId>> Triple::vertex_orbits() const {
  const std::size_t n = graph_.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& row : vperm_)
    for (VertexId x = 0; x < n; ++x) parent[find(x)] = find(row[x]);
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (VertexId x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<VertexId>> out;
  for (auto& [_, v] : groups) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<EdgeId>> Triple::edge_orbits() const {
  const std::size_t n = graph_.num_edges();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& row : eperm_)
    for (EdgeId e = 0; e < n; ++e) parent[find(e)] = find(row[e]);
  std::map<std::size_t, std::vector<EdgeId>> groups;
  for (EdgeId e = 0; e < n; ++e) groups[find(e)].push_back(e);
  std::vector<std::vector<EdgeId>> out;
  for (auto& [_, v] : groups) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

void Triple::validate() const {
  graph_.validate();
  const Graph& E = graph_;
  auto check_automorphism = [&](const std::vector<VertexId>& vp, const std::vector<EdgeId>& ep, const std::string& g) {
    for (EdgeId e = 0; e < E.num_edges(); ++e) {
      if (E.range(ep[e]) != vp[E.range(e)] || E.domain(ep[e]) != vp[E.domain(e)])
        throw Error(ErrorKind::NotAutomorphism,
                    "element " + g + " moves edge " + E.edge_name(e) + " without respecting range/domain");
    }
  };
  if (!is_finite()) {
    check_automorphism(vperm_[0], eperm_[0], "1");
    // sigma_{phi(m,e)} = sigma_m on vertices for all m iff phi(1,f) = 1 mod the vertex period, for every f
    BigInt period = 1;
    for (const auto& c : vcycles_) period = lcm(period, BigInt(static_cast<unsigned long>(c.size())));
    for (EdgeId e = 0; e < E.num_edges(); ++e) {
      BigInt q, r;
      floor_divmod(phi1_[e] - 1, period, q, r);
      if (r != 0) {
        for (VertexId x = 0; x < E.num_vertices(); ++x)
          if (act(phi1_[e], x) != act(Elem(1), x))
            throw Error(ErrorKind::VertexConditionViolation,
                        "g=1, e=" + E.edge_name(e) + ", x=" + E.vertex_name(x) + ": phi(1,e) moves x differently from 1");
      }
    }
    return;
  }
  const Group& G = group_;
  const auto els = G.elements();
  for (const auto& g : els) check_automorphism(vperm_[G.index(g)], eperm_[G.index(g)], G.name(g));
  const Elem one = G.identity();
  for (VertexId x = 0; x < E.num_vertices(); ++x)
    if (act(one, x) != x) throw Error(ErrorKind::NotHomomorphism, "identity moves vertex " + E.vertex_name(x));
  for (EdgeId e = 0; e < E.num_edges(); ++e)
    if (act_edge(one, e) != e) throw Error(ErrorKind::NotHomomorphism, "identity moves edge " + E.edge_name(e));
  for (const auto& g : els)
    for (const auto& h : els) {
      const Elem gh = G.mul(g, h);
      for (VertexId x = 0; x < E.num_vertices(); ++x)
        if (act(g, act(h, x)) != act(gh, x))
          throw Error(ErrorKind::NotHomomorphism,
                      "sigma_" + G.name(g) + " sigma_" + G.name(h) + " != sigma_" + G.name(gh) + " at " + E.vertex_name(x));
      for (EdgeId e = 0; e < E.num_edges(); ++e)
        if (act_edge(g, act_edge(h, e)) != act_edge(gh, e))
          throw Error(ErrorKind::NotHomomorphism,
                      "sigma_" + G.name(g) + " sigma_" + G.name(h) + " != sigma_" + G.name(gh) + " at " + E.edge_name(e));
    }
  for (const auto& g : els)
    for (const auto& h : els)
      for (EdgeId e = 0; e < E.num_edges(); ++e)
        if (phi(G.mul(g, h), e) != G.mul(phi(g, act_edge(h, e)), phi(h, e)))
          throw Error(ErrorKind::CocycleViolation,
                      "g=" + G.name(g) + ", h=" + G.name(h) + ", e=" + E.edge_name(e));
  for (const auto& g : els)
    for (EdgeId e = 0; e < E.num_edges(); ++e)
      for (VertexId x = 0; x < E.num_vertices(); ++x)
        if (act(phi(g, e), x) != act(g, x))
          throw Error(ErrorKind::VertexConditionViolation,
                      "g=" + G.name(g) + ", e=" + E.edge_name(e) + ", x=" + E.vertex_name(x));
}

}  // namespace ssg
