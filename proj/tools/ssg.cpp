#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ssg/analysis.hpp"
#include "ssg/correspondence.hpp"
#include "ssg/errors.hpp"
#include "ssg/groupoid.hpp"
#include "ssg/io.hpp"
#include "ssg/katsura.hpp"
#include "ssg/semigroup.hpp"

namespace fs = std::filesystem;
using namespace ssg;

namespace {

constexpr int kOk = 0, kNo = 1, kInputError = 2, kUnknown = 3;

int exit_for(Truth v) {
  switch (v) {
    case Truth::Yes: return kOk;
    case Truth::No: return kNo;
    default: return kUnknown;
  }
}

int print_verdict(const std::string& label, Truth v, std::size_t bound) {
  std::cout << label << ": " << verdict_text(v, bound) << "\n";
  return exit_for(v);
}

void print_cylinders(const Triple& t, const std::vector<CylinderWitness>& cyl) {
  for (const auto& c : cyl)
    std::cout << "  " << t.group().name(c.g) << " fixes Z(" << t.graph().format(c.path) << ")\n";
}

int katsura_one(const fs::path& a, const fs::path& b, bool ktheory, bool machine, std::size_t bound) {
  KatsuraData k{read_matrix(a), read_matrix(b)};
  validate_katsura(k);
  const KatsuraSummary s = summarize_katsura(k, ktheory);
  const Triple t = build_katsura(k);
  const Analyzer an(t, bound);
  const TopFreeResult tf = an.is_topologically_free();
  const auto cyl = an.fixed_cylinders();
  const Report r = an.analyze();
  if (machine) {
    Json j = katsura_to_json(s);
    j["topologically_free"] = std::string(to_string(tf.verdict));
    j["group_action_free"] = cyl.empty() ? "YES" : "NO";
    Json fc = Json::array();
    for (const auto& c : cyl) fc.push_back({{"g", t.group().name(c.g)}, {"cylinder", t.graph().format(c.path)}});
    j["fixed_cylinders"] = fc;
    j["notes"] = {{"amenable", r.amenable_note}, {"nuclear", r.nuclear_note}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << katsura_to_text(s);
    std::cout << "topologically free:     " << verdict_text(tf.verdict, bound) << "\n";
    std::cout << "group action free:      " << (cyl.empty() ? "YES" : "NO") << "\n";
    print_cylinders(t, cyl);
    std::cout << "note: " << r.amenable_note << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar graph actions: inverse semigroups, tight groupoids and their C*-algebras"};
  app.require_subcommand(1);
  std::size_t bound = kDefaultBound;
  std::string file, format = "text";

  auto* validate = app.add_subcommand("validate", "check a triple document");
  validate->add_option("file", file, "triple document")->required();

  auto* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--bound", bound, "search bound in states");
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  std::string afile, bfile, batch;
  bool ktheory = false;
  auto* katsura = app.add_subcommand("katsura", "verdicts and K-theory for a pair (A, B)");
  katsura->add_option("--A", afile, "matrix file");
  katsura->add_option("--B", bfile, "matrix file");
  katsura->add_flag("--ktheory", ktheory, "also compute K0 and K1");
  katsura->add_option("--batch", batch, "directory of NAME_A.txt / NAME_B.txt pairs");
  katsura->add_option("--bound", bound);
  katsura->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  std::string gname, vname;
  auto* fixed = app.add_subcommand("fixed-paths", "minimal strongly fixed paths of an element");
  fixed->add_option("file", file)->required();
  fixed->add_option("--g", gname)->required();
  fixed->add_option("--bound", bound);

  auto* slack = app.add_subcommand("slack", "is g slack at a vertex");
  slack->add_option("file", file)->required();
  slack->add_option("--g", gname)->required();
  slack->add_option("--vertex", vname)->required();
  slack->add_option("--bound", bound);

  auto* topfree = app.add_subcommand("topfree", "topological freeness of the tight groupoid");
  topfree->add_option("file", file)->required();
  topfree->add_option("--bound", bound);

  std::string op;
  std::vector<std::string> literals;
  auto* sg = app.add_subcommand("semigroup", "operations in the inverse semigroup: mul a b | star a | leq a b | cover f e1 e2 ...");
  sg->add_option("op", op)->required()->check(CLI::IsMember({"mul", "star", "leq", "cover", "idempotent"}));
  sg->add_option("--triple", file)->required();
  sg->add_option("literals", literals);

  auto* germ = app.add_subcommand("germ", "germs: eq u v | lag u | compose u v | inverse u | range u | member eta stream k zeta");
  germ->add_option("op", op)->required()->check(CLI::IsMember({"eq", "lag", "compose", "inverse", "range", "member"}));
  germ->add_option("--triple", file)->required();
  germ->add_option("literals", literals);
  germ->add_option("--bound", bound);

  auto* corr = app.add_subcommand("correspondence", "finite dimensional model of the correspondence");
  corr->add_option("op", op)->required()->check(CLI::IsMember({"verify"}));
  corr->add_option("file", file)->required();

  auto* orbits = app.add_subcommand("orbits", "vertex and edge orbits");
  orbits->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  auto need = [](std::size_t n, const std::vector<std::string>& lits, const char* what) {
    if (lits.size() != n) throw Error(ErrorKind::InvalidArgument, std::string(what) + " takes " + std::to_string(n) + " literal(s)");
  };

  try {
    if (*validate) {
      const Triple t = load_triple(file);
      std::cout << "valid: " << t.graph().num_vertices() << " vertices, " << t.graph().num_edges() << " edges, group "
                << (t.is_finite() ? "of order " + std::to_string(t.group().order()) : std::string("Z")) << "\n";
      return kOk;
    }
    if (*analyze) {
      const Triple t = load_triple(file);
      const Report r = Analyzer(t, bound).analyze();
      if (format == "machine")
        std::cout << report_to_json(t, r).dump(2) << "\n";
      else
        std::cout << report_to_text(t, r);
      return kOk;
    }
    if (*katsura) {
      const bool machine = format == "machine";
      if (!batch.empty()) {
        std::vector<fs::path> pairs;
        for (const auto& ent : fs::directory_iterator(batch)) {
          const std::string name = ent.path().filename().string();
          if (name.size() > 6 && name.ends_with("_A.txt")) pairs.push_back(ent.path());
        }
        std::sort(pairs.begin(), pairs.end());
        int worst = kOk;
        for (const auto& a : pairs) {
          const std::string stem = a.filename().string().substr(0, a.filename().string().size() - 6);
          const fs::path b = a.parent_path() / (stem + "_B.txt");
          std::cout << "== " << stem << "\n";
          try {
            katsura_one(a, b, ktheory, machine, bound);
          } catch (const Error& e) {
            std::cout << "error: " << e.what() << "\n";
            worst = kInputError;
          }
        }
        return worst;
      }
      if (afile.empty() || bfile.empty()) throw Error(ErrorKind::InvalidArgument, "katsura needs --A and --B, or --batch");
      return katsura_one(afile, bfile, ktheory, machine, bound);
    }
    if (*fixed) {
      const Triple t = load_triple(file);
      const Analyzer an(t, bound);
      const MinFixedSet m = an.minimal_strongly_fixed_paths(t.group().parse(gname));
      const Graph& E = t.graph();
      switch (m.kind) {
        case MinFixedSet::Kind::Finite:
          std::cout << m.paths.size() << " minimal strongly fixed path(s)\n";
          for (const auto& p : m.paths) std::cout << "  " << E.format(p) << "\n";
          return kOk;
        case MinFixedSet::Kind::Infinite: {
          const auto& w = *m.witness;
          std::cout << "infinitely many; prefix . loop^k . completion with prefix=" << E.format(w.prefix)
                    << " loop=" << E.format(w.loop) << " completion=" << E.format(w.completion) << "\n";
          for (std::size_t k = 0; k < 3; ++k) std::cout << "  " << E.format(w.instance(E, k)) << "\n";
          return kOk;
        }
        default:
          std::cout << "UNKNOWN (bound " << m.bound << ")\n";
          return kUnknown;
      }
    }
    if (*slack) {
      const Triple t = load_triple(file);
      const Analyzer an(t, bound);
      auto x = t.graph().find_vertex(vname);
      if (!x) throw Error(ErrorKind::InvalidArgument, "unknown vertex '" + vname + "'");
      const SlackResult s = an.is_slack(t.group().parse(gname), *x);
      if (s.depth) std::cout << "depth: " << *s.depth << "\n";
      return print_verdict("slack", s.verdict, bound);
    }
    if (*topfree) {
      const Triple t = load_triple(file);
      const TopFreeResult r = Analyzer(t, bound).is_topologically_free();
      for (const auto& c : r.entryless_circuits) std::cout << "circuit without entry: " << t.graph().format(c) << "\n";
      for (auto& [g, x] : r.non_slack)
        std::cout << t.group().name(g) << " fixes Z(" << t.graph().vertex_name(x) << ") and is not slack there\n";
      return print_verdict("topologically free", r.verdict, bound);
    }
    if (*sg) {
      const Triple t = load_triple(file);
      const Semigroup S(t);
      if (op == "mul") {
        need(2, literals, "mul");
        std::cout << S.format(S.mul(S.parse(literals[0]), S.parse(literals[1]))) << "\n";
        return kOk;
      }
      if (op == "star") {
        need(1, literals, "star");
        std::cout << S.format(S.star(S.parse(literals[0]))) << "\n";
        return kOk;
      }
      if (op == "idempotent") {
        need(1, literals, "idempotent");
        return print_verdict("idempotent", truth(S.is_idempotent(S.parse(literals[0]))), bound);
      }
      if (op == "leq") {
        need(2, literals, "leq");
        return print_verdict("leq", truth(S.leq(S.parse(literals[0]), S.parse(literals[1]))), bound);
      }
      if (literals.empty()) throw Error(ErrorKind::InvalidArgument, "cover takes f followed by the family");
      std::vector<SgElem> fam;
      for (std::size_t i = 1; i < literals.size(); ++i) fam.push_back(S.parse(literals[i]));
      return print_verdict("cover", truth(S.is_cover(fam, S.parse(literals[0]))), bound);
    }
    if (*germ) {
      const Triple t = load_triple(file);
      const Groupoid G(t, bound);
      if (op == "eq") {
        need(2, literals, "eq");
        return print_verdict("equal", truth(G.germ_eq(G.parse_germ(literals[0]), G.parse_germ(literals[1]))), bound);
      }
      if (op == "lag") {
        need(1, literals, "lag");
        std::cout << G.format(G.lag(G.parse_germ(literals[0]))) << "\n";
        return kOk;
      }
      if (op == "compose") {
        need(2, literals, "compose");
        std::cout << G.format(G.compose(G.parse_germ(literals[0]), G.parse_germ(literals[1]))) << "\n";
        return kOk;
      }
      if (op == "inverse") {
        need(1, literals, "inverse");
        std::cout << G.format(G.invert(G.parse_germ(literals[0]))) << "\n";
        return kOk;
      }
      if (op == "range") {
        need(1, literals, "range");
        std::cout << G.format(G.range(G.parse_germ(literals[0]))) << "\n";
        return kOk;
      }
      need(4, literals, "member");
      const long k = std::stol(literals[2]);
      const bool in = G.is_groupoid_element(G.parse_infinite(literals[0]), Corona::of(G.parse_stream(literals[1])), k,
                                            G.parse_infinite(literals[3]));
      return print_verdict("member", truth(in), bound);
    }
    if (*corr) {
      const Triple t = load_triple(file);
      const CorrespondenceModel m(t);
      const CorrespondenceReport rep = verify_relations(m);
      for (const auto& c : rep.checks) {
        std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name;
        if (!c.passed) std::cout << "  [" << c.witness << "]";
        std::cout << "\n";
      }
      std::cout << "module full: " << (rep.full ? "yes" : "no, the graph has sinks") << "\n";
      return rep.all_passed() ? kOk : kNo;
    }
    if (*orbits) {
      const Triple t = load_triple(file);
      const Graph& E = t.graph();
      for (const auto& o : t.vertex_orbits()) {
        std::cout << "vertices:";
        for (auto x : o) std::cout << " " << E.vertex_name(x);
        std::cout << "\n";
      }
      for (const auto& o : t.edge_orbits()) {
        std::cout << "edges:";
        for (auto e : o) std::cout << " " << E.edge_name(e);
        std::cout << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
