#pragma once

#include <random>
#include <string>
#include <vector>

#include "ssg/io.hpp"
#include "ssg/katsura.hpp"
#include "ssg/triple.hpp"

#ifndef SSG_FIXTURE_DIR
#error "SSG_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace ssg::test {

inline std::string fixture_path(const std::string& name) { return std::string(SSG_FIXTURE_DIR) + "/" + name; }
inline Triple fixture(const std::string& name) { return load_triple(fixture_path(name)); }

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m;
  for (auto r : rows) {
    std::vector<BigInt> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}

inline Triple katsura(std::initializer_list<std::initializer_list<long>> a, std::initializer_list<std::initializer_list<long>> b) {
  return build_katsura({mat(a), mat(b)});
}

// random path of length at most n with range `start`
inline Path random_path(const Graph& E, std::mt19937_64& rng, std::size_t n, VertexId start) {
  std::vector<EdgeId> edges;
  VertexId v = start;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& in = E.into(v);
    if (in.empty()) break;
    EdgeId e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    edges.push_back(e);
    v = E.domain(e);
  }
  return edges.empty() ? E.vertex_path(start) : E.path(edges);
}

inline Path random_path(const Graph& E, std::mt19937_64& rng, std::size_t max_len) {
  const VertexId x = std::uniform_int_distribution<std::size_t>(0, E.num_vertices() - 1)(rng);
  return random_path(E, rng, std::uniform_int_distribution<std::size_t>(0, max_len)(rng), x);
}

inline Elem random_elem(const Triple& t, std::mt19937_64& rng, long span = 6) {
  if (t.is_finite()) return Elem(static_cast<unsigned long>(std::uniform_int_distribution<std::size_t>(0, t.group().order() - 1)(rng)));
  return Elem(std::uniform_int_distribution<long>(-span, span)(rng));
}

// random KatsuraData with N <= 3 and entries <= 3 satisfying the nonempty-row and support conditions
inline KatsuraData random_katsura(std::mt19937_64& rng, std::size_t max_n = 3, long max_entry = 3) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  KatsuraData k;
  k.A.assign(n, std::vector<BigInt>(n, 0));
  k.B.assign(n, std::vector<BigInt>(n, 0));
  std::uniform_int_distribution<long> a(0, max_entry), b(-max_entry, max_entry);
  std::bernoulli_distribution sparse(0.4);
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (sparse(rng)) continue;
      k.A[i][j] = a(rng);
      if (k.A[i][j] > 0) {
        any = true;
        k.B[i][j] = b(rng);
      }
    }
    if (!any) {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      k.A[i][j] = std::uniform_int_distribution<long>(1, max_entry)(rng);
      k.B[i][j] = b(rng);
    }
  }
  return k;
}

}  // namespace ssg::test
