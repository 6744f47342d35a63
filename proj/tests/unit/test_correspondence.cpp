#include <doctest.h>

#include <random>

#include "ssg/correspondence.hpp"
#include "ssg/errors.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

void all_pass(const Triple& t) {
  const CorrespondenceModel m(t);
  const CorrespondenceReport r = verify_relations(m);
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.passed);
  }
  CHECK(r.all_passed());
  CHECK(r.first_failure() == nullptr);
  CHECK_NOTHROW(require_relations(m, t));
}

ZMatrix random_element(const CorrespondenceModel& m, std::mt19937_64& rng) {
  ZMatrix y(m.module_dim(), m.coefficient_dim());
  std::uniform_int_distribution<long> d(-3, 3);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) = d(rng);
  return m.P() * y;
}

}  // namespace

TEST_CASE("every identity holds on valid finite triples") {
  for (const char* f : {"swap.json", "swap_restrict.json", "z2_two_vertex.json", "triv2.json", "loop.json", "ex1110_s3_loop.json"}) {
    INFO(f);
    all_pass(test::fixture(f));
  }
  const CorrespondenceReport r = verify_relations(CorrespondenceModel(test::fixture("swap.json")));
  CHECK(r.checks.size() == 13);
}

TEST_CASE("dimensions and the swap unitaries") {
  const Triple t = test::fixture("swap.json");
  const CorrespondenceModel m(t);
  CHECK(m.coefficient_dim() == 2);
  CHECK(m.module_dim() == 4);
  const Graph& E = t.graph();
  const auto s = t.group().index(t.group().parse("s"));
  const EdgeId a = *E.find_edge("a"), b = *E.find_edge("b");
  CHECK(m.V(s) * m.t(a) == m.t(b));
  CHECK(m.V(s) * m.t(b) == m.t(a));
  CHECK(m.V(0) == m.P());
  CHECK_FALSE(m.has_sinks());
}

TEST_CASE("trivial group reduces to the graph family") {
  const Triple t = test::fixture("loop.json");
  const CorrespondenceModel m(t);
  CHECK(m.coefficient_dim() == 1);
  CHECK(m.V(0) == ZMatrix::identity(m.module_dim()));
  CHECK(m.v(0) == ZMatrix::identity(1));
}

TEST_CASE("range projections split the module") {
  const Triple t = test::fixture("z2_two_vertex.json");
  const CorrespondenceModel m(t);
  const Graph& E = t.graph();
  const VertexId u = *E.find_vertex("u"), w = *E.find_vertex("w");
  CHECK((m.Q(u) * m.Q(w)).is_zero());
  CHECK(m.Q(u) + m.Q(w) == m.P());
  CHECK_FALSE(m.Q(u).is_zero());
  CHECK_FALSE(m.Q(w).is_zero());
  CHECK(m.Q(u) * m.t(*E.find_edge("f")) == m.t(*E.find_edge("f")));
  CHECK((m.Q(w) * m.t(*E.find_edge("f"))).is_zero());
}

TEST_CASE("integer group is rejected") {
  try {
    CorrespondenceModel m(test::fixture("od.json"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedBackend);
  }
}

TEST_CASE("corrupted cocycle fails the covariance identity first") {
  const Triple good = test::fixture("swap.json");
  const Graph& E = good.graph();
  const auto s = good.group().index(good.group().parse("s"));
  auto phi = good.phi_table();
  phi[s][*E.find_edge("a")] = good.group().parse("s");
  const Triple bad = Triple::finite(E, good.group(), good.vertex_table(), good.edge_table(), phi);
  CHECK_THROWS(bad.validate());
  const CorrespondenceModel m(good);
  const CorrespondenceReport r = verify_relations(m, bad);
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name == "v_g t_e = t_ge v_phi(g,e)");
  CHECK(r.first_failure()->witness == "g=s, e=a");
  try {
    require_relations(m, bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationFailed);
    CHECK(std::string(e.what()).find("v_g t_e = t_ge v_phi(g,e)") != std::string::npos);
  }
}

TEST_CASE("module identities on fuzzed elements") {
  std::mt19937_64 rng(10);
  std::size_t cases = 0;
  for (const char* f : {"swap.json", "swap_restrict.json", "z2_two_vertex.json", "ex1110_s3_loop.json"}) {
    const Triple t = test::fixture(f);
    const CorrespondenceModel m(t);
    const Group& G = t.group();
    for (int i = 0; i < 100; ++i) {
      const ZMatrix y = random_element(m, rng), z = random_element(m, rng);
      for (std::size_t g = 0; g < G.order(); ++g) {
        CHECK(m.inner(m.V(g) * y, m.V(g) * z) == m.inner(y, z));
        const std::size_t gi = G.index(G.inv(Elem(static_cast<unsigned long>(g))));
        CHECK(m.inner(m.V(g) * y, z) == m.inner(y, m.V(gi) * z));
        ++cases;
      }
      ZMatrix sum(m.module_dim(), m.coefficient_dim());
      for (VertexId x = 0; x < t.graph().num_vertices(); ++x) sum = sum + m.Q(x) * y;
      CHECK(sum == y);
      CHECK(m.theta(y, y) * z == m.right(y, m.inner(y, z)));
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("inner products of generators") {
  const Triple t = test::fixture("ex1110_s3_loop.json");
  const CorrespondenceModel m(t);
  const Graph& E = t.graph();
  for (EdgeId e = 0; e < E.num_edges(); ++e) {
    CHECK(m.inner(m.t(e), m.t(e)) == m.q(E.domain(e)));
    for (EdgeId f = 0; f < E.num_edges(); ++f)
      if (f != e) CHECK(m.inner(m.t(e), m.t(f)).is_zero());
  }
}

TEST_CASE("sinks are reported") {
  const Graph E({"u", "w"}, {{"a", "u", "w"}});
  const Group G = Group::finite({"1"}, {{0}});
  const Triple t = Triple::finite(E, G, {{0, 1}}, {{0}}, {{Elem(0)}});
  const CorrespondenceModel m(t);
  CHECK(m.has_sinks());
  const CorrespondenceReport r = verify_relations(m);
  CHECK_FALSE(r.full);
  CHECK(verify_relations(CorrespondenceModel(test::fixture("swap.json"))).full);
}
