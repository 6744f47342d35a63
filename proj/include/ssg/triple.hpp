#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ssg/bigint.hpp"
#include "ssg/graph.hpp"
#include "ssg/group.hpp"

namespace ssg {

inline constexpr std::size_t kDefaultBound = 10000;

using IntMatrix = std::vector<std::vector<BigInt>>;

struct KatsuraData {
  IntMatrix A;
  IntMatrix B;
  std::size_t size() const { return A.size(); }
};

// An eventually periodic infinite path prefix.cycle.cycle... kept in canonical
// form: the cycle is primitive and the prefix is as short as possible.
class EvPeriodicPath {
 public:
  EvPeriodicPath() = default;
  EvPeriodicPath(const Graph& g, const Path& prefix, const Path& cycle);

  VertexId range() const { return r_; }
  const std::vector<EdgeId>& prefix() const { return prefix_; }
  const std::vector<EdgeId>& cycle() const { return cycle_; }
  // 1-based letter access
  EdgeId at(std::size_t n) const;
  Path truncate(const Graph& g, std::size_t n) const;
  // drop the first n letters
  EvPeriodicPath drop(const Graph& g, std::size_t n) const;
  bool starts_with(const Path& p) const;

  friend bool operator==(const EvPeriodicPath&, const EvPeriodicPath&) = default;
  friend auto operator<=>(const EvPeriodicPath&, const EvPeriodicPath&) = default;

 private:
  VertexId r_ = 0;
  std::vector<EdgeId> prefix_;
  std::vector<EdgeId> cycle_;
};

class Triple {
 public:
  static Triple finite(Graph graph, Group group, std::vector<std::vector<VertexId>> vertex_perm,
                       std::vector<std::vector<EdgeId>> edge_perm, std::vector<std::vector<Elem>> phi);
  static Triple integers(Graph graph, std::vector<VertexId> sigma1_vertices, std::vector<EdgeId> sigma1_edges,
                         std::vector<BigInt> phi1, std::optional<KatsuraData> katsura = std::nullopt);

  // Checks automorphism, homomorphism, cocycle and vertex conditions.
  void validate() const;

  const Graph& graph() const { return graph_; }
  const Group& group() const { return group_; }
  std::uint64_t id() const { return id_; }
  const std::optional<KatsuraData>& katsura() const { return katsura_; }
  bool is_finite() const { return group_.is_finite(); }

  VertexId act(const Elem& g, VertexId x) const;
  EdgeId act_edge(const Elem& g, EdgeId e) const;
  Elem phi(const Elem& g, EdgeId e) const;

  Path act(const Elem& g, const Path& p) const;
  Elem cocycle(const Elem& g, const Path& p) const;
  std::pair<Path, Elem> act_restrict(const Elem& g, const Path& p) const;
  EvPeriodicPath act_infinite(const Elem& g, const EvPeriodicPath& xi, std::size_t bound = kDefaultBound) const;

  std::vector<std::vector<VertexId>> vertex_orbits() const;
  std::vector<std::vector<EdgeId>> edge_orbits() const;

  // Integers only: orbit length L_e of e under the generator, and S_e = phi(L_e, e).
  // Then L_e | m iff m fixes e, and phi(m, e) = m S_e / L_e in that case.
  const BigInt& orbit_length(EdgeId e) const { return orbit_len_[e]; }
  const BigInt& orbit_sum(EdgeId e) const { return orbit_sum_[e]; }

  const std::vector<std::vector<VertexId>>& vertex_table() const { return vperm_; }
  const std::vector<std::vector<EdgeId>>& edge_table() const { return eperm_; }
  const std::vector<std::vector<Elem>>& phi_table() const { return phi_; }
  const std::vector<BigInt>& phi1() const { return phi1_; }

 private:
  Triple(Graph graph, Group group);
  void index_integer_orbits();

  Graph graph_;
  Group group_;
  std::uint64_t id_ = 0;
  std::optional<KatsuraData> katsura_;

  // finite backend: rows indexed by group element index
  std::vector<std::vector<VertexId>> vperm_;
  std::vector<std::vector<EdgeId>> eperm_;
  std::vector<std::vector<Elem>> phi_;

  // integer backend: vperm_[0], eperm_[0] hold sigma_1
  std::vector<BigInt> phi1_;
  std::vector<std::vector<VertexId>> vcycles_;
  std::vector<std::size_t> vcycle_of_, vpos_;
  std::vector<std::vector<EdgeId>> ecycles_;
  std::vector<std::size_t> ecycle_of_, epos_;
  std::vector<std::vector<BigInt>> ecycle_prefix_;  // partial sums of phi1 along each edge cycle
  std::vector<BigInt> orbit_len_, orbit_sum_;
};

}  // namespace ssg
