#include "ssg/io.hpp"

#include <fstream>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, where + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where + "/" + key, "missing");
  return *it;
}

std::string text_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema(where, "expected a string");
}

BigInt integer_of(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()), 10);
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<unsigned long long>()), 10);
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const Error&) {
      schema(where, "expected an integer");
    }
  }
  schema(where, "expected an integer");
}

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

IntMatrix matrix_of(const Json& v, const std::string& where) {
  if (!v.is_array()) schema(where, "expected an array of rows");
  IntMatrix m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    if (!v[i].is_array()) schema(w, "expected a row");
    std::vector<BigInt> row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(integer_of(v[i][j], w + "/" + std::to_string(j)));
    m.push_back(std::move(row));
  }
  return m;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(integer_json(v));
    rows.push_back(row);
  }
  return rows;
}

template <class Find>
std::size_t lookup(const Find& find, const std::string& name, const std::string& where, const char* what) {
  auto id = find(name);
  if (!id) schema(where, std::string("unknown ") + what + " '" + name + "'");
  return *id;
}

}  // namespace

Triple triple_from_json(const Json& doc) {
  if (!doc.is_object()) schema("", "document must be an object");
  if (doc.contains("katsura")) {
    for (const char* k : {"graph", "group", "action", "cocycle"})
      if (doc.contains(k)) schema("/" + std::string(k), "not allowed together with /katsura");
    const Json& k = doc["katsura"];
    return build_katsura({matrix_of(field(k, "A", "/katsura"), "/katsura/A"), matrix_of(field(k, "B", "/katsura"), "/katsura/B")});
  }
  const Json& gj = field(doc, "graph", "");
  const Json& vs = field(gj, "vertices", "/graph");
  if (!vs.is_array()) schema("/graph/vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(text_of(vs[i], "/graph/vertices/" + std::to_string(i)));
  const Json& es = field(gj, "edges", "/graph");
  if (!es.is_array()) schema("/graph/edges", "expected an array");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string w = "/graph/edges/" + std::to_string(i);
    edges.push_back({text_of(field(es[i], "id", w), w + "/id"), text_of(field(es[i], "range", w), w + "/range"),
                     text_of(field(es[i], "domain", w), w + "/domain")});
  }
  Graph graph(vertices, edges);
  auto fv = [&](const std::string& s) { return graph.find_vertex(s); };
  auto fe = [&](const std::string& s) { return graph.find_edge(s); };

  const Json& grp = field(doc, "group", "");
  const std::string kind = text_of(field(grp, "kind", "/group"), "/group/kind");
  const Json empty = Json::object();
  const Json& action = doc.contains("action") ? doc["action"] : empty;
  const Json& cocycle = doc.contains("cocycle") ? doc["cocycle"] : empty;

  if (kind == "integers") {
    std::vector<VertexId> sv(graph.num_vertices());
    std::vector<EdgeId> se(graph.num_edges());
    std::vector<BigInt> phi1(graph.num_edges(), 1);
    for (std::size_t x = 0; x < sv.size(); ++x) sv[x] = x;
    for (std::size_t e = 0; e < se.size(); ++e) se[e] = e;
    if (action.contains("sigma1_vertices"))
      for (auto& [k, v] : action["sigma1_vertices"].items()) {
        const std::string w = "/action/sigma1_vertices/" + k;
        sv[lookup(fv, k, w, "vertex")] = lookup(fv, text_of(v, w), w, "vertex");
      }
    if (action.contains("sigma1_edges"))
      for (auto& [k, v] : action["sigma1_edges"].items()) {
        const std::string w = "/action/sigma1_edges/" + k;
        se[lookup(fe, k, w, "edge")] = lookup(fe, text_of(v, w), w, "edge");
      }
    if (cocycle.contains("phi1"))
      for (auto& [k, v] : cocycle["phi1"].items()) {
        const std::string w = "/cocycle/phi1/" + k;
        phi1[lookup(fe, k, w, "edge")] = integer_of(v, w);
      }
    return Triple::integers(std::move(graph), sv, se, phi1);
  }
  if (kind != "finite") schema("/group/kind", "expected \"finite\" or \"integers\"");

  const Json& els = field(grp, "elements", "/group");
  if (!els.is_array()) schema("/group/elements", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < els.size(); ++i) names.push_back(text_of(els[i], "/group/elements/" + std::to_string(i)));
  auto fg = [&](const std::string& s) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return i;
    return std::nullopt;
  };
  const Json& mul = field(grp, "mul", "/group");
  if (!mul.is_array() || mul.size() != names.size()) schema("/group/mul", "expected one row per element");
  std::vector<std::vector<std::size_t>> table(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string w = "/group/mul/" + std::to_string(i);
    if (!mul[i].is_array() || mul[i].size() != names.size()) schema(w, "expected one entry per element");
    for (std::size_t j = 0; j < names.size(); ++j)
      table[i].push_back(lookup(fg, text_of(mul[i][j], w + "/" + std::to_string(j)), w + "/" + std::to_string(j), "element"));
  }
  Group group = Group::finite(names, table);
  if (grp.contains("identity")) {
    const std::string id = text_of(grp["identity"], "/group/identity");
    if (group.name(group.identity()) != id) schema("/group/identity", "'" + id + "' is not the identity of the table");
  }
  const std::size_t n = names.size();
  std::vector<std::vector<VertexId>> vp(n, std::vector<VertexId>(graph.num_vertices()));
  std::vector<std::vector<EdgeId>> ep(n, std::vector<EdgeId>(graph.num_edges()));
  std::vector<std::vector<Elem>> phi(n, std::vector<Elem>(graph.num_edges(), group.identity()));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < graph.num_vertices(); ++x) vp[g][x] = x;
    for (std::size_t e = 0; e < graph.num_edges(); ++e) ep[g][e] = e;
  }
  if (action.contains("vertices"))
    for (auto& [gname, row] : action["vertices"].items()) {
      const std::string w = "/action/vertices/" + gname;
      const auto g = lookup(fg, gname, w, "element");
      for (auto& [k, v] : row.items()) vp[g][lookup(fv, k, w + "/" + k, "vertex")] = lookup(fv, text_of(v, w + "/" + k), w + "/" + k, "vertex");
    }
  if (action.contains("edges"))
    for (auto& [gname, row] : action["edges"].items()) {
      const std::string w = "/action/edges/" + gname;
      const auto g = lookup(fg, gname, w, "element");
      for (auto& [k, v] : row.items()) ep[g][lookup(fe, k, w + "/" + k, "edge")] = lookup(fe, text_of(v, w + "/" + k), w + "/" + k, "edge");
    }
  for (auto& [gname, row] : cocycle.items()) {
    const std::string w = "/cocycle/" + gname;
    const auto g = lookup(fg, gname, w, "element");
    for (auto& [k, v] : row.items())
      phi[g][lookup(fe, k, w + "/" + k, "edge")] = Elem(static_cast<unsigned long>(lookup(fg, text_of(v, w + "/" + k), w + "/" + k, "element")));
  }
  return Triple::finite(std::move(graph), std::move(group), vp, ep, phi);
}

Json triple_to_json(const Triple& t) {
  if (t.katsura()) return Json{{"katsura", {{"A", matrix_json(t.katsura()->A)}, {"B", matrix_json(t.katsura()->B)}}}};
  const Graph& E = t.graph();
  Json doc;
  Json vs = Json::array(), es = Json::array();
  for (VertexId x = 0; x < E.num_vertices(); ++x) vs.push_back(E.vertex_name(x));
  for (EdgeId e = 0; e < E.num_edges(); ++e)
    es.push_back({{"id", E.edge_name(e)}, {"range", E.vertex_name(E.range(e))}, {"domain", E.vertex_name(E.domain(e))}});
  doc["graph"] = {{"vertices", vs}, {"edges", es}};
  const Group& G = t.group();
  if (!G.is_finite()) {
    doc["group"] = {{"kind", "integers"}};
    Json sv = Json::object(), se = Json::object(), p1 = Json::object();
    for (VertexId x = 0; x < E.num_vertices(); ++x) sv[E.vertex_name(x)] = E.vertex_name(t.act(Elem(1), x));
    for (EdgeId e = 0; e < E.num_edges(); ++e) {
      se[E.edge_name(e)] = E.edge_name(t.act_edge(Elem(1), e));
      p1[E.edge_name(e)] = integer_json(t.phi1()[e]);
    }
    doc["action"] = {{"sigma1_vertices", sv}, {"sigma1_edges", se}};
    doc["cocycle"] = {{"phi1", p1}};
    return doc;
  }
  Json mul = Json::array();
  for (const auto& row : G.table()) {
    Json r = Json::array();
    for (auto k : row) r.push_back(G.names()[k]);
    mul.push_back(r);
  }
  doc["group"] = {{"kind", "finite"}, {"elements", G.names()}, {"identity", G.name(G.identity())}, {"mul", mul}};
  Json av = Json::object(), ae = Json::object(), cc = Json::object();
  for (const auto& g : G.elements()) {
    Json rv = Json::object(), re = Json::object(), rc = Json::object();
    for (VertexId x = 0; x < E.num_vertices(); ++x) rv[E.vertex_name(x)] = E.vertex_name(t.act(g, x));
    for (EdgeId e = 0; e < E.num_edges(); ++e) {
      re[E.edge_name(e)] = E.edge_name(t.act_edge(g, e));
      rc[E.edge_name(e)] = G.name(t.phi(g, e));
    }
    av[G.name(g)] = rv;
    ae[G.name(g)] = re;
    cc[G.name(g)] = rc;
  }
  doc["action"] = {{"vertices", av}, {"edges", ae}};
  doc["cocycle"] = cc;
  return doc;
}

Triple parse_triple(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  Triple t = triple_from_json(doc);
  t.validate();
  return t;
}

Triple load_triple(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triple(ss.str());
}

IntMatrix parse_matrix(std::string_view text) {
  IntMatrix m;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<BigInt> row;
    for (std::string tok; ls >> tok;) {
      try {
        row.push_back(parse_bigint(tok));
      } catch (const Error&) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (!row.empty()) m.push_back(std::move(row));
  }
  if (m.empty()) throw Error(ErrorKind::Parse, "matrix has no rows");
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i].size() != m[0].size()) throw Error(ErrorKind::Parse, "matrix rows have different lengths");
  return m;
}

IntMatrix read_matrix(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::string verdict_text(Truth v, std::size_t bound) {
  if (v == Truth::Unknown) return "UNKNOWN (bound " + std::to_string(bound) + ")";
  return std::string(to_string(v));
}

Json report_to_json(const Triple& t, const Report& r) {
  const Graph& E = t.graph();
  const Group& G = t.group();
  auto v = [](Truth x) { return std::string(to_string(x)); };
  Json j;
  j["bound"] = r.bound;
  Json sfe = Json::array();
  for (auto& [g, e] : r.strongly_fixed_edges) sfe.push_back({{"g", G.name(g)}, {"edge", E.edge_name(e)}});
  j["pseudo_free"] = v(r.pseudo_free);
  j["strongly_fixed_edges"] = sfe;
  Json h = {{"verdict", v(r.hausdorff.verdict)}, {"method", r.hausdorff.method}, {"witness", nullptr}};
  if (r.hausdorff.witness) {
    const auto& w = *r.hausdorff.witness;
    h["witness"] = {{"g", G.name(w.g)}, {"prefix", E.format(w.prefix)}, {"loop", E.format(w.loop)}, {"completion", E.format(w.completion)}};
  }
  j["hausdorff"] = h;
  j["minimal"] = v(truth(r.weakly_g_transitive));
  j["weakly_g_transitive"] = v(truth(r.weakly_g_transitive));
  j["g_transitive"] = v(truth(r.g_transitive));
  j["condition_l"] = v(truth(r.condition_l));
  j["locally_contracting"] = v(truth(r.condition_l));
  Json circ = Json::array(), ns = Json::array(), und = Json::array();
  for (const auto& c : r.topologically_free.entryless_circuits) circ.push_back(E.format(c));
  for (auto& [g, x] : r.topologically_free.non_slack) ns.push_back({{"g", G.name(g)}, {"vertex", E.vertex_name(x)}});
  for (auto& [g, x] : r.topologically_free.undecided) und.push_back({{"g", G.name(g)}, {"vertex", E.vertex_name(x)}});
  j["topologically_free"] = {{"verdict", v(r.topologically_free.verdict)}, {"entryless_circuits", circ}, {"non_slack", ns}, {"undecided", und}};
  j["essentially_principal"] = v(r.essentially_principal);
  Json fc = Json::array();
  for (const auto& c : r.fixed_cylinders) fc.push_back({{"g", G.name(c.g)}, {"cylinder", E.format(c.path)}});
  j["group_action_free"] = {{"verdict", v(r.group_action_free)}, {"fixed_cylinders", fc}};
  j["simple"] = {{"verdict", v(r.simple)}, {"reason", r.simple_reason}};
  j["purely_infinite_simple"] = v(r.purely_infinite_simple);
  j["notes"] = {{"amenable", r.amenable_note}, {"nuclear", r.nuclear_note}, {"projections", r.projection_note}};
  return j;
}

std::string report_to_text(const Triple& t, const Report& r) {
  const Graph& E = t.graph();
  const Group& G = t.group();
  const auto b = r.bound;
  std::ostringstream o;
  auto yn = [](bool x) { return x ? "YES" : "NO"; };
  o << "pseudo free:            " << verdict_text(r.pseudo_free, b) << "\n";
  for (auto& [g, e] : r.strongly_fixed_edges) o << "  strongly fixed edge " << E.edge_name(e) << " by " << G.name(g) << "\n";
  o << "hausdorff:              " << verdict_text(r.hausdorff.verdict, b) << " (" << r.hausdorff.method << ")\n";
  if (r.hausdorff.witness) {
    const auto& w = *r.hausdorff.witness;
    o << "  pumping witness g=" << G.name(w.g) << " prefix=" << E.format(w.prefix) << " loop=" << E.format(w.loop)
      << " completion=" << E.format(w.completion) << "\n";
  }
  o << "minimal:                " << yn(r.weakly_g_transitive) << "\n";
  o << "G-transitive:           " << yn(r.g_transitive) << "\n";
  o << "condition (L):          " << yn(r.condition_l) << "\n";
  for (const auto& c : r.topologically_free.entryless_circuits) o << "  circuit without entry " << E.format(c) << "\n";
  o << "topologically free:     " << verdict_text(r.topologically_free.verdict, b) << "\n";
  for (auto& [g, x] : r.topologically_free.non_slack)
    o << "  " << G.name(g) << " fixes Z(" << E.vertex_name(x) << ") but is not slack there\n";
  for (auto& [g, x] : r.topologically_free.undecided) o << "  slackness of " << G.name(g) << " at " << E.vertex_name(x) << " undecided\n";
  o << "essentially principal:  " << verdict_text(r.essentially_principal, b) << "\n";
  o << "group action free:      " << verdict_text(r.group_action_free, b) << "\n";
  for (const auto& c : r.fixed_cylinders) o << "  " << G.name(c.g) << " fixes Z(" << E.format(c.path) << ")\n";
  o << "simple:                 " << verdict_text(r.simple, b) << " (" << r.simple_reason << ")\n";
  o << "purely infinite simple: " << verdict_text(r.purely_infinite_simple, b) << "\n";
  o << "note: " << r.amenable_note << "\n";
  o << "note: " << r.nuclear_note << "\n";
  if (!r.projection_note.empty()) o << "note: " << r.projection_note << "\n";
  return o.str();
}

KatsuraSummary summarize_katsura(const KatsuraData& k, bool with_k_theory) {
  KatsuraAnalysis a(k);
  KatsuraSummary s{a.pseudo_free(), a.minimal(), a.condition_l(), a.hausdorff(), a.essentially_principal(),
                   a.sufficient_ep(), a.simple(), Truth::Unknown, std::nullopt};
  s.purely_infinite_simple = s.simple;
  if (with_k_theory) s.k_theory = k_theory(k);
  return s;
}

Json katsura_to_json(const KatsuraSummary& s) {
  Json j = {{"pseudo_free", s.pseudo_free ? "YES" : "NO"},
            {"minimal", s.minimal ? "YES" : "NO"},
            {"condition_l", s.condition_l ? "YES" : "NO"},
            {"hausdorff", to_string(s.hausdorff)},
            {"essentially_principal", to_string(s.essentially_principal)},
            {"sufficient_ep", to_string(s.sufficient_ep)},
            {"simple", to_string(s.simple)},
            {"purely_infinite_simple", to_string(s.purely_infinite_simple)}};
  if (s.k_theory) j["k_theory"] = {{"K0", s.k_theory->K0.to_string()}, {"K1", s.k_theory->K1.to_string()}};
  return j;
}

std::string katsura_to_text(const KatsuraSummary& s) {
  std::ostringstream o;
  auto yn = [](bool x) { return x ? "YES" : "NO"; };
  o << "pseudo free:            " << yn(s.pseudo_free) << "\n";
  o << "hausdorff:              " << to_string(s.hausdorff) << "\n";
  o << "minimal:                " << yn(s.minimal) << "\n";
  o << "condition (L):          " << yn(s.condition_l) << "\n";
  o << "essentially principal:  " << to_string(s.essentially_principal) << "\n";
  o << "limit criterion:        " << to_string(s.sufficient_ep) << "\n";
  o << "simple:                 " << to_string(s.simple) << "\n";
  o << "purely infinite simple: " << to_string(s.purely_infinite_simple) << "\n";
  if (s.k_theory) {
    o << "K0:                     " << s.k_theory->K0.to_string() << "\n";
    o << "K1:                     " << s.k_theory->K1.to_string() << "\n";
  }
  return o.str();
}

}  // namespace ssg
