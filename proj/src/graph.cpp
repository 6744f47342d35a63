#include "ssg/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertex_names_(std::move(vertices)) {
  for (VertexId x = 0; x < vertex_names_.size(); ++x) {
    if (!vertex_index_.emplace(vertex_names_[x], x).second)
      throw Error(ErrorKind::DuplicateId, "vertex '" + vertex_names_[x] + "' declared twice");
  }
  into_.resize(vertex_names_.size());
  out_of_.resize(vertex_names_.size());
  for (const auto& spec : edges) {
    if (vertex_index_.count(spec.id))
      throw Error(ErrorKind::DuplicateId, "edge id '" + spec.id + "' is also a vertex id");
    EdgeId e = edge_names_.size();
    if (!edge_index_.emplace(spec.id, e).second)
      throw Error(ErrorKind::DuplicateId, "edge '" + spec.id + "' declared twice");
    auto r = vertex_index_.find(spec.range);
    auto d = vertex_index_.find(spec.domain);
    if (r == vertex_index_.end() || d == vertex_index_.end())
      throw Error(ErrorKind::DanglingEdge, "edge '" + spec.id + "' references unknown vertex '" +
                                               (r == vertex_index_.end() ? spec.range : spec.domain) + "'");
    edge_names_.push_back(spec.id);
    range_.push_back(r->second);
    domain_.push_back(d->second);
    into_[r->second].push_back(e);
    out_of_[d->second].push_back(e);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

void Graph::validate() const {
  for (VertexId x = 0; x < num_vertices(); ++x)
    if (into_[x].empty()) throw Error(ErrorKind::SourceVertex, "vertex '" + vertex_names_[x] + "' receives no edge");
}

Path Graph::vertex_path(VertexId x) const {
  Path p;
  p.r_ = p.d_ = x;
  return p;
}

Path Graph::edge_path(EdgeId e) const {
  Path p;
  p.r_ = range_[e];
  p.d_ = domain_[e];
  p.edges_ = {e};
  return p;
}

Path Graph::path(const std::vector<EdgeId>& edges) const {
  if (edges.empty()) throw Error(ErrorKind::InvalidArgument, "empty edge list needs a vertex");
  return path(range_[edges.front()], edges);
}

Path Graph::path(VertexId range, const std::vector<EdgeId>& edges) const {
  if (edges.empty()) return vertex_path(range);
  if (range_[edges.front()] != range)
    throw Error(ErrorKind::NotComposable, "first edge does not have range " + vertex_names_[range]);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (domain_[edges[i]] != range_[edges[i + 1]])
      throw Error(ErrorKind::NotComposable, "d(" + edge_names_[edges[i]] + ") != r(" + edge_names_[edges[i + 1]] + ")");
  }
  Path p;
  p.r_ = range;
  p.d_ = domain_[edges.back()];
  p.edges_ = edges;
  return p;
}

Path Graph::concat(const Path& a, const Path& b) const {
  if (a.domain() != b.range())
    throw Error(ErrorKind::NotComposable, "cannot concatenate '" + format(a) + "' with '" + format(b) + "'");
  Path p = a;
  p.edges_.insert(p.edges_.end(), b.edges_.begin(), b.edges_.end());
  p.d_ = b.d_;
  return p;
}

Path Graph::prefix(const Path& p, std::size_t n) const {
  if (n >= p.length()) return p;
  return path(p.range(), std::vector<EdgeId>(p.edges().begin(), p.edges().begin() + n));
}

Path Graph::suffix(const Path& p, std::size_t from) const {
  if (from == 0) return p;
  if (from >= p.length()) return vertex_path(p.domain());
  return path(std::vector<EdgeId>(p.edges().begin() + from, p.edges().end()));
}

std::vector<Path> Graph::paths_from(VertexId x, std::size_t n) const {
  std::vector<Path> layer{vertex_path(x)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      if (p.is_vertex()) {
        for (EdgeId e : into_[x]) next.push_back(edge_path(e));
      } else {
        for (EdgeId e : into_[p.domain()]) {
          Path q = p;
          q.edges_.push_back(e);
          q.d_ = domain_[e];
          next.push_back(std::move(q));
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<Path> Graph::all_paths_up_to(std::size_t n) const {
  std::vector<Path> out;
  for (VertexId x = 0; x < num_vertices(); ++x)
    for (std::size_t k = 0; k <= n; ++k) {
      auto layer = paths_from(x, k);
      out.insert(out.end(), layer.begin(), layer.end());
    }
  return out;
}

bool Graph::has_entry(const Path& p) const {
  for (EdgeId e : p.edges())
    if (into_[domain_[e]].size() >= 2) return true;
  return false;
}

std::vector<Path> Graph::circuits_without_entry() const {
  // On simple vertices v -> d(unique incoming edge) is a partial function;
  // its cycles are exactly the primitive entryless circuits.
  const std::size_t n = num_vertices();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Path> out;
  for (VertexId start = 0; start < n; ++start) {
    std::vector<VertexId> trail;
    VertexId v = start;
    while (is_simple_vertex(v) && state[v] == 0) {
      state[v] = 1;
      trail.push_back(v);
      v = domain_[into_[v][0]];
    }
    if (is_simple_vertex(v) && state[v] == 1) {
      auto it = std::find(trail.begin(), trail.end(), v);
      std::vector<VertexId> cyc(it, trail.end());
      auto lowest = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), lowest, cyc.end());
      std::vector<EdgeId> edges;
      for (VertexId u : cyc) edges.push_back(into_[u][0]);
      out.push_back(path(edges));
    }
    for (VertexId u : trail) state[u] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::reaches(VertexId x, VertexId y) const {
  std::vector<bool> seen(num_vertices(), false);
  std::vector<VertexId> stack{x};
  seen[x] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == y) return true;
    for (EdgeId e : out_of_[v])
      if (!seen[range_[e]]) {
        seen[range_[e]] = true;
        stack.push_back(range_[e]);
      }
  }
  return false;
}

std::vector<std::vector<bool>> Graph::reachability() const {
  std::vector<std::vector<bool>> m(num_vertices(), std::vector<bool>(num_vertices()));
  for (VertexId x = 0; x < num_vertices(); ++x)
    for (VertexId y = 0; y < num_vertices(); ++y) m[x][y] = reaches(x, y);
  return m;
}

std::string Graph::format(const Path& p) const {
  if (p.is_vertex()) return vertex_names_[p.range()];
  std::string s;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ' ';
    s += edge_names_[p[i]];
  }
  return s;
}

Path Graph::parse_path(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw Error(ErrorKind::Parse, "empty path literal");
  if (tokens.size() == 1) {
    if (auto x = find_vertex(tokens[0])) return vertex_path(*x);
  }
  std::vector<EdgeId> edges;
  for (const auto& t : tokens) {
    auto e = find_edge(t);
    if (!e) throw Error(ErrorKind::Parse, "unknown edge or vertex '" + t + "'");
    edges.push_back(*e);
  }
  return path(edges);
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.range() != q.range() || p.length() > q.length()) return false;
  return std::equal(p.edges().begin(), p.edges().end(), q.edges().begin());
}

}  // namespace ssg
