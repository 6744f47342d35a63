#include "ssg/linear.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ssg {

std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& A,
                                                    const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (m == 0) return std::vector<Rational>(n, 0);
  const std::size_t cols = n + m;  // originals then artificials; rhs kept separately
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols, 0));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    T[i][n + i] = 1;
    basis[i] = n + i;
  }
  // reduced costs of phase one (minimise the sum of artificials)
  std::vector<Rational> d(cols, 0);
  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[j] -= T[i][j];
    objective += rhs[i];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for a bounded-below phase one
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = d[enter];
    for (std::size_t j = 0; j < cols; ++j)
      if (T[leave][j] != 0) d[j] -= f * T[leave][j];
    objective += f * rhs[leave];
    basis[leave] = enter;
  }
  if (objective != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = rhs[i];
  return x;
}

std::vector<std::size_t> strong_components(std::size_t num_nodes,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<std::vector<std::size_t>> adj(num_nodes);
  for (auto [a, b] : arcs) adj[a].push_back(b);
  const std::size_t unset = num_nodes;
  std::vector<std::size_t> index(num_nodes, unset), low(num_nodes, 0), comp(num_nodes, unset);
  std::vector<bool> on_stack(num_nodes, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, ncomp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : adj[v]) {
      if (index[w] == unset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        auto w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < num_nodes; ++v)
    if (index[v] == unset) visit(v);
  return comp;
}

namespace {

// circulation f >= 0 on `ids` with W f >= 0 and f[target] >= 1
std::optional<std::vector<Rational>> circulation_through(std::size_t num_nodes, const std::vector<WeightedArc>& arcs,
                                                         const std::vector<std::size_t>& ids, std::size_t target) {
  const std::size_t k = ids.size();
  const std::size_t dims = arcs[ids[0]].weight.size();
  const std::size_t nvars = k + dims + 1;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<bool> touched(num_nodes, false);
  for (auto id : ids) touched[arcs[id].from] = touched[arcs[id].to] = true;
  for (std::size_t v = 0; v < num_nodes; ++v) {
    if (!touched[v]) continue;
    std::vector<Rational> row(nvars, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (arcs[ids[i]].to == v) row[i] += 1;
      if (arcs[ids[i]].from == v) row[i] -= 1;
    }
    A.push_back(std::move(row));
    b.push_back(0);
  }
  for (std::size_t p = 0; p < dims; ++p) {
    std::vector<Rational> row(nvars, 0);
    for (std::size_t i = 0; i < k; ++i) row[i] = arcs[ids[i]].weight[p];
    row[k + p] = -1;
    A.push_back(std::move(row));
    b.push_back(0);
  }
  std::vector<Rational> row(nvars, 0);
  row[target] = 1;
  row[k + dims] = -1;
  A.push_back(std::move(row));
  b.push_back(1);
  auto x = feasible_point(A, b);
  if (!x) return std::nullopt;
  x->resize(k);
  return x;
}

std::vector<std::size_t> euler_walk(const std::vector<WeightedArc>& arcs, const std::map<std::size_t, BigInt>& mult) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  std::map<std::size_t, BigInt> left = mult;
  for (auto& [id, m] : mult) out[arcs[id].from].push_back(id);
  std::map<std::size_t, std::size_t> cursor;
  const std::size_t start = arcs[mult.begin()->first].from;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{start, static_cast<std::size_t>(-1)}};
  std::vector<std::size_t> walk;
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto& lst = out[v];
    auto& c = cursor[v];
    while (c < lst.size() && left[lst[c]] == 0) ++c;
    if (c < lst.size()) {
      auto id = lst[c];
      left[id] -= 1;
      stack.push_back({arcs[id].to, id});
    } else {
      if (via != static_cast<std::size_t>(-1)) walk.push_back(via);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

std::optional<std::vector<std::size_t>> search(std::size_t num_nodes, const std::vector<WeightedArc>& arcs,
                                               const std::vector<std::size_t>& ids) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto id : ids) pairs.emplace_back(arcs[id].from, arcs[id].to);
  const auto comp = strong_components(num_nodes, pairs);
  std::map<std::size_t, std::vector<std::size_t>> internal;
  for (auto id : ids)
    if (comp[arcs[id].from] == comp[arcs[id].to]) internal[comp[arcs[id].from]].push_back(id);
  for (auto& [_, cids] : internal) {
    std::map<std::size_t, Rational> total;
    for (std::size_t i = 0; i < cids.size(); ++i) {
      if (total.count(cids[i])) continue;
      auto f = circulation_through(num_nodes, arcs, cids, i);
      if (!f) continue;
      for (std::size_t j = 0; j < cids.size(); ++j)
        if ((*f)[j] > 0) total[cids[j]] += (*f)[j];
    }
    if (total.size() == cids.size()) {
      BigInt den = 1;
      for (auto& [id, v] : total) den = lcm(den, v.get_den());
      std::map<std::size_t, BigInt> mult;
      for (auto& [id, v] : total) {
        Rational scaled = v * den;
        mult[id] = scaled.get_num();
      }
      return euler_walk(arcs, mult);
    }
    if (!total.empty()) {
      std::vector<std::size_t> sub;
      for (auto& [id, _] : total) sub.push_back(id);
      if (auto w = search(num_nodes, arcs, sub)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> nonnegative_closed_walk(std::size_t num_nodes,
                                                                const std::vector<WeightedArc>& arcs) {
  if (arcs.empty()) return std::nullopt;
  std::vector<std::size_t> ids(arcs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return search(num_nodes, arcs, ids);
}

}  // namespace ssg
