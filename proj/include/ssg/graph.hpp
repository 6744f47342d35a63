#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ssg {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// A finite path stored range-first: edges()[0] carries the range of the path.
// A path of length zero is a vertex.
class Path {
 public:
  Path() = default;

  VertexId range() const { return r_; }
  VertexId domain() const { return d_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<EdgeId>& edges() const { return edges_; }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.r_ <=> b.r_;
  }

 private:
  friend class Graph;
  VertexId r_ = 0;
  VertexId d_ = 0;
  std::vector<EdgeId> edges_;
};

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string domain;
};

class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edge_names_.size(); }
  const std::string& vertex_name(VertexId x) const { return vertex_names_[x]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  VertexId range(EdgeId e) const { return range_[e]; }
  VertexId domain(EdgeId e) const { return domain_[e]; }
  // r^{-1}(x)
  const std::vector<EdgeId>& into(VertexId x) const { return into_[x]; }
  // d^{-1}(x)
  const std::vector<EdgeId>& out_of(VertexId x) const { return out_of_[x]; }

  // Throws SourceVertex when some vertex receives no edge.
  void validate() const;

  Path vertex_path(VertexId x) const;
  Path edge_path(EdgeId e) const;
  Path path(const std::vector<EdgeId>& edges) const;
  Path path(VertexId range, const std::vector<EdgeId>& edges) const;
  Path concat(const Path& a, const Path& b) const;
  Path prefix(const Path& p, std::size_t n) const;
  Path suffix(const Path& p, std::size_t from) const;

  std::vector<Path> paths_from(VertexId x, std::size_t n) const;
  std::vector<Path> all_paths_up_to(std::size_t n) const;

  bool is_simple_vertex(VertexId x) const { return into_[x].size() == 1; }
  bool has_entry(const Path& p) const;
  std::vector<Path> circuits_without_entry() const;
  bool is_circuit(const Path& p) const { return !p.is_vertex() && p.domain() == p.range(); }

  bool reaches(VertexId x, VertexId y) const;
  std::vector<std::vector<bool>> reachability() const;

  std::string format(const Path& p) const;
  Path parse_path(std::string_view text) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<VertexId> range_;
  std::vector<VertexId> domain_;
  std::vector<std::vector<EdgeId>> into_;
  std::vector<std::vector<EdgeId>> out_of_;
};

// p is a prefix of q
bool is_prefix(const Path& p, const Path& q);

}  // namespace ssg
