#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/semigroup.hpp"
#include "ssg/triple.hpp"
#include "ssg/verdict.hpp"

namespace ssg {

// prefix . loop^k . completion is a minimal strongly fixed path for g, for every k >= 0.
struct PumpWitness {
  Elem g;
  Path prefix;
  Path loop;
  Path completion;

  Path instance(const Graph& E, std::size_t k) const;
};

struct MinFixedSet {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Finite;
  std::vector<Path> paths;
  std::optional<PumpWitness> witness;
  std::size_t bound = 0;
};

struct HausdorffResult {
  Truth verdict = Truth::Unknown;
  std::optional<PumpWitness> witness;
  std::string method;
};

struct SlackResult {
  Truth verdict = Truth::Unknown;
  std::optional<std::size_t> depth;
};

// g fixes every infinite path in Z(path)
struct CylinderWitness {
  Elem g;
  Path path;
};

struct TopFreeResult {
  Truth verdict = Truth::Unknown;
  std::vector<Path> entryless_circuits;
  std::vector<std::pair<Elem, VertexId>> non_slack;
  std::vector<std::pair<Elem, VertexId>> undecided;
};

struct FixedPoints {
  enum class Kind { None, Unique, Characterized };
  Kind kind = Kind::None;
  std::optional<EvPeriodicPath> point;
  bool isolated = false;
  // Characterized: the fixed points are base.xi with xi in Z(d(base)) and g xi = xi
  Path base;
  Elem g;
};

struct Report {
  std::size_t bound = kDefaultBound;
  Truth pseudo_free = Truth::Unknown;
  std::vector<std::pair<Elem, EdgeId>> strongly_fixed_edges;
  HausdorffResult hausdorff;
  bool weakly_g_transitive = false;
  bool g_transitive = false;
  bool condition_l = false;
  TopFreeResult topologically_free;
  Truth essentially_principal = Truth::Unknown;
  Truth group_action_free = Truth::Unknown;
  std::vector<CylinderWitness> fixed_cylinders;
  Truth simple = Truth::Unknown;
  std::string simple_reason;
  Truth purely_infinite_simple = Truth::Unknown;
  std::string amenable_note;
  std::string nuclear_note;
  std::string projection_note;
};

class Analyzer {
 public:
  explicit Analyzer(const Triple& t, std::size_t bound = kDefaultBound) : t_(&t), bound_(bound) {}

  const Triple& triple() const { return *t_; }
  std::size_t bound() const { return bound_; }

  bool is_strongly_fixed(const Elem& g, const Path& alpha) const;
  bool is_minimal_strongly_fixed(const Elem& g, const Path& alpha) const;
  MinFixedSet minimal_strongly_fixed_paths(const Elem& g) const;
  Truth is_pseudo_free() const;
  std::vector<std::pair<Elem, EdgeId>> strongly_fixed_edges() const;
  HausdorffResult is_hausdorff() const;

  bool ggeq(VertexId x, VertexId y) const;
  bool is_g_transitive() const;
  bool is_weakly_g_transitive() const;

  std::vector<std::pair<Path, Elem>> iterate_g_circuit(const Elem& g, const Path& gamma, std::size_t n) const;
  EvPeriodicPath canonical_fixed_point(const Elem& g, const Path& gamma, const Path& beta) const;
  FixedPoints fixed_points_of(const SgElem& s) const;

  Truth fixes_cylinder(const Elem& g, VertexId x) const;
  SlackResult is_slack(const Elem& g, VertexId x) const;
  TopFreeResult is_topologically_free() const;
  bool is_locally_contracting() const { return t_->graph().circuits_without_entry().empty(); }
  std::vector<CylinderWitness> fixed_cylinders() const;

  // Integers backend: the nonnegative generator of {l : l fixes Z(x) pointwise}; 0 if only l = 0.
  BigInt cylinder_stabilizer(VertexId x) const;

  Report analyze() const;

 private:
  bool kills(EdgeId e) const { return t_->orbit_sum(e) == 0; }
  std::vector<bool> nonzero_reach(VertexId x) const;
  std::optional<std::size_t> longest_nonzero_walk(VertexId x) const;

  const Triple* t_;
  std::size_t bound_;
};

// delegates to the analysis and cross-checks against a direct search
Truth is_e_star_unitary(const Triple& t, std::size_t path_bound = 3);

}  // namespace ssg
