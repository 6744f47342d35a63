#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ssg/analysis.hpp"
#include "ssg/errors.hpp"
#include "ssg/semigroup.hpp"
#include "support.hpp"

using namespace ssg;

namespace {

// direct evaluation, independent of the state search
bool strongly_fixed(const Triple& t, const Elem& g, const Path& p) {
  auto [moved, restr] = t.act_restrict(g, p);
  return moved == p && t.group().is_identity(restr);
}

std::set<Path> brute_minimal(const Triple& t, const Elem& g, std::size_t L) {
  const Graph& E = t.graph();
  std::set<Path> out;
  for (const auto& p : E.all_paths_up_to(L)) {
    if (!strongly_fixed(t, g, p)) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < p.length() && minimal; ++k)
      if (strongly_fixed(t, g, E.prefix(p, k))) minimal = false;
    if (minimal) out.insert(p);
  }
  return out;
}

std::vector<Elem> probe_elements(const Triple& t) {
  if (t.is_finite()) return t.group().elements();
  return {-4, -3, -2, -1, 1, 2, 3, 4, 6, 8};
}

// s . xi for s = (alpha, g, beta) and xi in Z(beta)
std::optional<EvPeriodicPath> act_sg(const Triple& t, const SgElem& s, const EvPeriodicPath& xi) {
  const Graph& E = t.graph();
  if (!xi.starts_with(s.beta)) return std::nullopt;
  const EvPeriodicPath rest = xi.drop(E, s.beta.length());
  const EvPeriodicPath moved = t.act_infinite(s.g, rest);
  const Path head = E.concat(s.alpha, E.path(moved.range(), moved.prefix()));
  return EvPeriodicPath(E, head, E.path(moved.cycle()));
}

std::vector<EvPeriodicPath> small_infinite_paths(const Graph& E, std::size_t pre, std::size_t cyc) {
  std::vector<EvPeriodicPath> out;
  const auto all = E.all_paths_up_to(std::max(pre, cyc));
  for (const auto& c : all) {
    if (c.length() == 0 || c.length() > cyc || !E.is_circuit(c)) continue;
    for (const auto& p : all)
      if (p.length() <= pre && p.domain() == c.range()) out.emplace_back(E, p, c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* const kAll[] = {"swap.json", "swap_restrict.json", "triv2.json", "z2_two_vertex.json", "ex1110_s3_loop.json",
                            "loop.json", "od.json", "od_explicit.json", "k15.json", "k16_n2.json", "k16_n3.json",
                            "k16_n5.json", "nh.json"};

}  // namespace

TEST_CASE("strongly fixed paths") {
  const Triple triv = test::fixture("triv2.json");
  const Analyzer a(triv);
  const Elem s = triv.group().parse("s");
  CHECK(a.is_strongly_fixed(s, triv.graph().parse_path("a")));
  CHECK(a.is_strongly_fixed(s, triv.graph().parse_path("b")));
  CHECK_FALSE(a.is_strongly_fixed(s, triv.graph().vertex_path(0)));
  CHECK(a.is_strongly_fixed(triv.group().identity(), triv.graph().vertex_path(0)));
}

TEST_CASE("minimal strongly fixed sets on small fixtures") {
  const Triple sw = test::fixture("swap.json");
  auto m = Analyzer(sw).minimal_strongly_fixed_paths(sw.group().parse("s"));
  CHECK(m.kind == MinFixedSet::Kind::Finite);
  CHECK(m.paths.empty());
  const Triple triv = test::fixture("triv2.json");
  auto t = Analyzer(triv).minimal_strongly_fixed_paths(triv.group().parse("s"));
  CHECK(t.kind == MinFixedSet::Kind::Finite);
  std::set<std::string> names;
  for (const auto& p : t.paths) names.insert(triv.graph().format(p));
  CHECK(names == std::set<std::string>{"a", "b"});
  const Triple nh = test::fixture("nh.json");
  CHECK(Analyzer(nh).minimal_strongly_fixed_paths(Elem(1)).kind == MinFixedSet::Kind::Infinite);
}

TEST_CASE("minimal strongly fixed sets agree with brute force up to length 6") {
  for (const char* f : {"od.json", "swap.json", "triv2.json", "k15.json", "k16_n2.json", "k16_n3.json", "nh.json",
                        "swap_restrict.json", "z2_two_vertex.json", "ex1110_s3_loop.json"}) {
    const Triple t = test::fixture(f);
    const Analyzer an(t);
    for (const auto& g : probe_elements(t)) {
      if (t.group().is_identity(g)) continue;
      const auto brute = brute_minimal(t, g, 6);
      const auto m = an.minimal_strongly_fixed_paths(g);
      if (m.kind == MinFixedSet::Kind::Finite) {
        std::set<Path> got(m.paths.begin(), m.paths.end());
        std::set<Path> short_got;
        for (const auto& p : got)
          if (p.length() <= 6) short_got.insert(p);
        CHECK_MESSAGE(short_got == brute, f, " g=", t.group().name(g));
      } else {
        REQUIRE(m.kind == MinFixedSet::Kind::Infinite);
        const auto& w = *m.witness;
        for (std::size_t k = 0; k < 4; ++k) {
          const Path p = w.instance(t.graph(), k);
          if (p.length() <= 6) CHECK_MESSAGE(brute.count(p), f);
        }
      }
    }
  }
}

TEST_CASE("decomposition of strongly fixed paths over minimal ones") {
  for (const char* f : {"triv2.json", "k15.json", "swap.json", "nh.json"}) {
    const Triple t = test::fixture(f);
    const Graph& E = t.graph();
    for (const auto& g : probe_elements(t)) {
      const auto mins = brute_minimal(t, g, 5);
      for (const auto& p : E.all_paths_up_to(5)) {
        std::size_t hits = 0;
        for (const auto& m : mins)
          if (is_prefix(m, p)) ++hits;
        CHECK(hits == (strongly_fixed(t, g, p) ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("extensions of strongly fixed paths stay strongly fixed, fuzzed") {
  std::mt19937_64 rng(99);
  std::size_t cases = 0;
  for (const char* f : {"triv2.json", "k15.json", "nh.json", "ex1110_s3_loop.json"}) {
    const Triple t = test::fixture(f);
    const Analyzer an(t);
    const Graph& E = t.graph();
    for (int i = 0; i < 300; ++i) {
      const Elem g = test::random_elem(t, rng, 4);
      const Path a = test::random_path(E, rng, 4);
      if (!an.is_strongly_fixed(g, a)) continue;
      const Path b = test::random_path(E, rng, 4, a.domain());
      const Path ab = E.concat(a, b);
      CHECK(an.is_strongly_fixed(g, ab));
      CHECK(t.group().is_identity(t.cocycle(g, ab)));
      ++cases;
    }
  }
  CHECK(cases > 100);
}

TEST_CASE("pseudo freeness") {
  CHECK(Analyzer(test::fixture("k16_n2.json")).is_pseudo_free() == Truth::Yes);
  CHECK(Analyzer(test::fixture("k15.json")).is_pseudo_free() == Truth::No);
  CHECK(Analyzer(test::fixture("od.json")).is_pseudo_free() == Truth::Yes);
  CHECK(Analyzer(test::fixture("swap.json")).is_pseudo_free() == Truth::Yes);
  CHECK(Analyzer(test::fixture("triv2.json")).is_pseudo_free() == Truth::No);
}

TEST_CASE("pseudo-free consequences") {
  std::mt19937_64 rng(3);
  for (const char* f : kAll) {
    const Triple t = test::fixture(f);
    const Analyzer an(t);
    if (an.is_pseudo_free() != Truth::Yes) continue;
    const Graph& E = t.graph();
    for (const auto& p : E.all_paths_up_to(6)) {
      if (p.is_vertex()) continue;
      for (const auto& g : probe_elements(t))
        if (!t.group().is_identity(g)) CHECK_FALSE(an.is_strongly_fixed(g, p));
    }
    for (int i = 0; i < 200; ++i) {
      const Elem g1 = test::random_elem(t, rng, 5), g2 = test::random_elem(t, rng, 5);
      const Path a = test::random_path(E, rng, 4);
      if (t.act(g1, a) == t.act(g2, a) && t.cocycle(g1, a) == t.cocycle(g2, a)) CHECK(g1 == g2);
    }
  }
}

TEST_CASE("hausdorff verdicts") {
  CHECK(Analyzer(test::fixture("k15.json")).is_hausdorff().verdict == Truth::Yes);
  CHECK(Analyzer(test::fixture("swap.json")).is_hausdorff().verdict == Truth::Yes);
  CHECK(Analyzer(test::fixture("triv2.json")).is_hausdorff().verdict == Truth::Yes);
  const Triple nh = test::fixture("nh.json");
  const Analyzer an(nh);
  const auto h = an.is_hausdorff();
  REQUIRE(h.verdict == Truth::No);
  REQUIRE(h.witness);
  std::set<Path> seen;
  for (std::size_t k = 0; k <= 5; ++k) {
    const Path p = h.witness->instance(nh.graph(), k);
    CHECK(an.is_strongly_fixed(h.witness->g, p));
    CHECK(an.is_minimal_strongly_fixed(h.witness->g, p));
    seen.insert(p);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("a finite group with infinitely many minimal strongly fixed paths") {
  // s fixes a and restricts to itself, fixes b with trivial restriction: a^k b for every k
  const Group z2 = Group::finite({"1", "s"}, {{0, 1}, {1, 0}});
  Graph E({"x"}, {{"a", "x", "x"}, {"b", "x", "x"}});
  const Triple t = Triple::finite(E, z2, {{0}, {0}}, {{0, 1}, {0, 1}}, {{Elem(0), Elem(0)}, {Elem(1), Elem(0)}});
  t.validate();
  const Analyzer an(t);
  const auto h = an.is_hausdorff();
  REQUIRE(h.verdict == Truth::No);
  for (std::size_t k = 0; k < 4; ++k) CHECK(an.is_minimal_strongly_fixed(h.witness->g, h.witness->instance(E, k)));
}

TEST_CASE("transitivity") {
  CHECK(Analyzer(test::fixture("swap.json")).is_g_transitive());
  CHECK(Analyzer(test::fixture("loop.json")).is_g_transitive());
  const Triple k15t = test::fixture("k15.json");
  const Analyzer k15(k15t);
  CHECK(k15.is_g_transitive());
  CHECK(k15.is_weakly_g_transitive());
  const Triple nh = test::fixture("nh.json");
  const Analyzer a(nh);
  CHECK_FALSE(a.is_g_transitive());
  CHECK_FALSE(a.ggeq(*nh.graph().find_vertex("1"), *nh.graph().find_vertex("2")));
  CHECK(a.ggeq(*nh.graph().find_vertex("2"), *nh.graph().find_vertex("1")));
  const Triple z2 = test::fixture("z2_two_vertex.json");
  CHECK(Analyzer(z2).is_g_transitive());
}

TEST_CASE("weak transitivity matches transitivity without sinks") {
  for (const char* f : kAll) {
    const Triple t = test::fixture(f);
    const Graph& E = t.graph();
    bool sinks = false;
    for (VertexId x = 0; x < E.num_vertices(); ++x)
      if (E.out_of(x).empty()) sinks = true;
    if (sinks) continue;
    const Analyzer an(t);
    CHECK_MESSAGE(an.is_weakly_g_transitive() == an.is_g_transitive(), f);
  }
}

TEST_CASE("a sink makes a reducible graph minimal") {
  // vertex 2 receives only from 1 and emits nothing back: every infinite path passes 1
  const Triple t = test::katsura({{1, 0}, {1, 0}}, {{1, 0}, {1, 0}});
  const Analyzer an(t);
  CHECK_FALSE(an.is_g_transitive());
  CHECK(an.is_weakly_g_transitive());
}

TEST_CASE("G-circuit iteration and fixed points") {
  const Triple od = test::fixture("od_explicit.json");
  const Graph& E = od.graph();
  const Analyzer an(od);
  auto it = an.iterate_g_circuit(Elem(1), E.parse_path("e0"), 3);
  CHECK(E.format(it[0].first) == "e0");
  CHECK(it[0].second == 1);
  CHECK(E.format(it[1].first) == "e1");
  CHECK(it[1].second == 0);
  CHECK(E.format(it[2].first) == "e1");
  CHECK(it[2].second == 0);
  const EvPeriodicPath fp = an.canonical_fixed_point(Elem(1), E.parse_path("e0"), E.vertex_path(0));
  CHECK(fp == EvPeriodicPath(E, E.parse_path("e0"), E.parse_path("e1")));

  const Semigroup O(od);
  const FixedPoints f = an.fixed_points_of(O.parse("(e0; 1; x)"));
  REQUIRE(f.kind == FixedPoints::Kind::Unique);
  CHECK(*f.point == fp);
  CHECK_FALSE(f.isolated);

  const Triple sw = test::fixture("swap.json");
  const Graph& S = sw.graph();
  const Analyzer as(sw);
  CHECK(as.canonical_fixed_point(sw.group().parse("s"), S.parse_path("a"), S.vertex_path(0)) ==
        EvPeriodicPath(S, S.parse_path("a"), S.parse_path("b")));
  CHECK(as.fixed_points_of(Semigroup(sw).parse("(a; s; b)")).kind == FixedPoints::Kind::None);

  const Triple loop = test::fixture("loop.json");
  const Analyzer al(loop);
  const FixedPoints lf = al.fixed_points_of(Semigroup(loop).parse("(a; 1; x)"));
  REQUIRE(lf.kind == FixedPoints::Kind::Unique);
  CHECK(lf.isolated);
  CHECK(*lf.point == EvPeriodicPath(loop.graph(), loop.graph().vertex_path(0), loop.graph().parse_path("a")));

  const Path c = E.parse_path("e0");
  CHECK(an.iterate_g_circuit(Elem(0), c, 2)[1].first == c);
  try {
    as.iterate_g_circuit(sw.group().parse("s"), S.vertex_path(0), 2);
    FAIL("expected NotGCircuit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGCircuit);
  }
}

TEST_CASE("fixed point of a shrinking element is unique among small eventually periodic paths") {
  std::mt19937_64 rng(8);
  std::size_t cases = 0;
  for (const char* f : {"swap.json", "swap_restrict.json", "z2_two_vertex.json", "ex1110_s3_loop.json", "od_explicit.json",
                        "k15.json"}) {
    const Triple t = test::fixture(f);
    const Graph& E = t.graph();
    const Semigroup S(t);
    const Analyzer an(t);
    const auto candidates = small_infinite_paths(E, 3, 3);
    for (int i = 0; i < 40; ++i) {
      const Path beta = test::random_path(E, rng, 2);
      const Elem g = test::random_elem(t, rng, 3);
      const Path gamma = test::random_path(E, rng, 3, beta.domain());
      if (gamma.is_vertex() || gamma.domain() != t.act(g, gamma.range())) continue;
      const SgElem s = S.make(E.concat(beta, gamma), g, beta);
      const FixedPoints fp = an.fixed_points_of(s);
      REQUIRE(fp.kind == FixedPoints::Kind::Unique);
      CHECK(act_sg(t, s, *fp.point) == fp.point);
      for (const auto& xi : candidates) {
        auto img = act_sg(t, s, xi);
        if (img && *img == xi) CHECK(xi == *fp.point);
      }
      CHECK(fp.isolated == !E.has_entry(gamma));
      ++cases;
    }
  }
  CHECK(cases > 50);
}

TEST_CASE("slackness and cylinders") {
  const Triple triv = test::fixture("triv2.json");
  const Analyzer at(triv);
  const auto s1 = at.is_slack(triv.group().parse("s"), 0);
  CHECK(s1.verdict == Truth::Yes);
  CHECK(*s1.depth == 1);
  const auto id = at.is_slack(triv.group().identity(), 0);
  CHECK(id.verdict == Truth::Yes);
  CHECK(*id.depth == 0);
  const Triple k16 = test::fixture("k16_n3.json");
  const Analyzer ak(k16);
  for (long l : {1, -2, 5}) {
    CHECK(ak.fixes_cylinder(Elem(l), 0) == Truth::Yes);
    CHECK(ak.is_slack(Elem(l), 0).verdict == Truth::No);
  }
  const Triple od = test::fixture("od.json");
  CHECK(Analyzer(od).fixes_cylinder(Elem(1), 0) == Truth::No);
  CHECK(Analyzer(od).cylinder_stabilizer(0) == 0);
  CHECK(ak.cylinder_stabilizer(0) == 1);
  const Triple k15 = test::fixture("k15.json");
  CHECK(Analyzer(k15).cylinder_stabilizer(0) == 0);
}

TEST_CASE("topological freeness and local contractivity") {
  CHECK(Analyzer(test::fixture("k15.json")).is_topologically_free().verdict == Truth::Yes);
  CHECK(Analyzer(test::fixture("k16_n2.json")).is_topologically_free().verdict == Truth::No);
  CHECK(Analyzer(test::fixture("swap.json")).is_topologically_free().verdict == Truth::Yes);
  CHECK(Analyzer(test::fixture("k15.json")).is_locally_contracting());
  CHECK_FALSE(Analyzer(test::fixture("loop.json")).is_locally_contracting());
  CHECK(Analyzer(test::fixture("od.json")).is_locally_contracting());
  const auto lf = Analyzer(test::fixture("loop.json")).is_topologically_free();
  CHECK(lf.verdict == Truth::No);
  CHECK(lf.entryless_circuits.size() == 1);
}

TEST_CASE("full reports") {
  const Report k15 = Analyzer(test::fixture("k15.json")).analyze();
  CHECK(k15.simple == Truth::Yes);
  CHECK(k15.purely_infinite_simple == Truth::Yes);
  CHECK_FALSE(k15.fixed_cylinders.empty());
  const Report k16 = Analyzer(test::fixture("k16_n2.json")).analyze();
  CHECK(k16.hausdorff.verdict == Truth::Yes);
  CHECK(k16.simple == Truth::No);
  const Report od = Analyzer(test::fixture("od.json")).analyze();
  CHECK(od.simple == Truth::Yes);
  CHECK(od.purely_infinite_simple == Truth::Yes);
  const Report nh = Analyzer(test::fixture("nh.json")).analyze();
  CHECK(nh.hausdorff.verdict == Truth::No);
  CHECK(nh.simple == Truth::Unknown);
  const Report ex = Analyzer(test::fixture("ex1110_s3_loop.json")).analyze();
  CHECK(ex.condition_l == false);
  CHECK(ex.simple == Truth::No);
}

TEST_CASE("verdict lattice on every fixture") {
  for (const char* f : kAll) {
    const Triple t = test::fixture(f);
    const Report r = Analyzer(t).analyze();
    if (r.purely_infinite_simple == Truth::Yes) {
      CHECK(r.simple == Truth::Yes);
      CHECK(r.condition_l);
    }
    if (r.simple == Truth::Yes) {
      CHECK(r.hausdorff.verdict == Truth::Yes);
      CHECK(r.weakly_g_transitive);
      CHECK(r.essentially_principal == Truth::Yes);
    }
    if (r.essentially_principal == Truth::Yes) CHECK(r.condition_l);
    if (r.hausdorff.verdict != Truth::Yes) CHECK(r.simple == Truth::Unknown);
    CHECK(r.pseudo_free == is_e_star_unitary(t));
    CHECK(Analyzer(t).is_locally_contracting() == t.graph().circuits_without_entry().empty());
  }
}
