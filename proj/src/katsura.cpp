#include "ssg/katsura.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ssg/errors.hpp"
#include "ssg/linear.hpp"

namespace ssg {

namespace {

std::string vname(std::size_t i) { return std::to_string(i + 1); }

std::string ename(std::size_t i, std::size_t j, const BigInt& n) {
  return "e:" + vname(i) + ":" + vname(j) + ":" + n.get_str();
}

}  // namespace

void validate_katsura(const KatsuraData& k) {
  const std::size_t n = k.A.size();
  if (n == 0) throw Error(ErrorKind::InvalidKatsuraData, "A is empty");
  if (k.B.size() != n) throw Error(ErrorKind::InvalidKatsuraData, "A and B have different sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (k.A[i].size() != n || k.B[i].size() != n)
      throw Error(ErrorKind::InvalidKatsuraData, "row " + vname(i) + " does not have " + std::to_string(n) + " entries");
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (k.A[i][j] < 0) throw Error(ErrorKind::InvalidKatsuraData, "A has a negative entry at (" + vname(i) + "," + vname(j) + ")");
      if (k.A[i][j] > 0) any = true;
      if (k.A[i][j] == 0 && k.B[i][j] != 0)
        throw Error(ErrorKind::InvalidKatsuraData, "B is nonzero at (" + vname(i) + "," + vname(j) + ") where A vanishes");
    }
    if (!any) throw Error(ErrorKind::InvalidKatsuraData, "row " + vname(i) + " of A is zero");
  }
}

Triple build_katsura(const KatsuraData& k) {
  validate_katsura(k);
  const std::size_t n = k.A.size();
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back(vname(i));
  std::vector<EdgeSpec> edges;
  std::vector<EdgeId> sigma;
  std::vector<BigInt> phi1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& a = k.A[i][j];
      const std::size_t base = edges.size();
      for (BigInt m = 0; m < a; ++m) {
        edges.push_back({ename(i, j, m), vname(i), vname(j)});
        BigInt q, r;
        floor_divmod(k.B[i][j] + m, a, q, r);
        sigma.push_back(base + r.get_ui());
        phi1.push_back(q);
      }
    }
  std::vector<VertexId> fixed(n);
  for (std::size_t i = 0; i < n; ++i) fixed[i] = i;
  return Triple::integers(Graph(vertices, edges), fixed, sigma, phi1, k);
}

FixTrace fixed_by_int(const Triple& t, const BigInt& l, const Path& alpha) {
  if (!t.katsura()) throw Error(ErrorKind::UnsupportedBackend, "not a Katsura triple");
  const auto& k = *t.katsura();
  const Graph& E = t.graph();
  FixTrace tr;
  tr.fixed = true;
  Rational K = l;
  for (EdgeId e : alpha.edges()) {
    const auto i = E.range(e), j = E.domain(e);
    K *= Rational(k.B[i][j], k.A[i][j]);
    K.canonicalize();
    tr.K.push_back(K);
    if (K.get_den() != 1) tr.fixed = false;
  }
  auto [moved, restr] = t.act_restrict(l, alpha);
  if ((moved == alpha) != tr.fixed) throw std::logic_error("quotient trace and action disagree on fixedness");
  if (tr.fixed && !tr.K.empty() && Rational(restr) != tr.K.back())
    throw std::logic_error("final quotient differs from the cocycle");
  return tr;
}

KatsuraAnalysis::KatsuraAnalysis(KatsuraData k) : k_(std::move(k)), n_(k_.A.size()) { validate_katsura(k_); }

bool KatsuraAnalysis::pseudo_free() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (edge(i, j) && k_.B[i][j] == 0) return false;
  return true;
}

bool KatsuraAnalysis::minimal() const {
  // walk[x][v]: some path starts at x and passes v, following i -> j when A_ij > 0
  std::vector<std::vector<bool>> walk(n_, std::vector<bool>(n_, false));
  for (std::size_t x = 0; x < n_; ++x) {
    walk[x][x] = true;
    for (std::size_t round = 0; round < n_; ++round)
      for (std::size_t i = 0; i < n_; ++i)
        if (walk[x][i])
          for (std::size_t j = 0; j < n_; ++j)
            if (edge(i, j)) walk[x][j] = true;
  }
  bool irreducible = true;
  for (const auto& row : walk)
    for (bool b : row) irreducible = irreducible && b;
  if (irreducible) return true;
  // With a sink, reducible A can still be minimal: what matters is that the
  // vertices unreachable from x carry no cycle.
  for (std::size_t x = 0; x < n_; ++x) {
    std::vector<std::vector<bool>> bad(n_, std::vector<bool>(n_, false));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) bad[i][j] = !walk[x][i] && !walk[x][j] && edge(i, j);
    for (std::size_t round = 0; round < n_; ++round)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t m = 0; m < n_; ++m)
          if (bad[i][m])
            for (std::size_t j = 0; j < n_; ++j)
              if (bad[m][j]) bad[i][j] = true;
    for (std::size_t i = 0; i < n_; ++i)
      if (bad[i][i]) return false;
  }
  return true;
}

bool KatsuraAnalysis::condition_l() const {
  // vertex i is simple when row i of A sums to 1; then it has a unique successor
  std::vector<long> next(n_, -1);
  for (std::size_t i = 0; i < n_; ++i) {
    BigInt sum = 0;
    std::size_t only = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      sum += k_.A[i][j];
      if (k_.A[i][j] > 0) only = j;
    }
    if (sum == 1) next[i] = static_cast<long>(only);
  }
  for (std::size_t s = 0; s < n_; ++s) {
    long v = static_cast<long>(s);
    for (std::size_t step = 0; step < n_ && v >= 0; ++step) {
      v = next[v];
      if (v == static_cast<long>(s)) return false;
    }
  }
  return true;
}

std::vector<bool> KatsuraAnalysis::live_reach(std::size_t i) const {
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{i};
  seen[i] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n_; ++j)
      if (live(v, j) && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return seen;
}

std::vector<KatsuraAnalysis::Cycle> KatsuraAnalysis::live_cycles() const {
  std::vector<Cycle> out;
  std::vector<std::size_t> trail;
  std::vector<bool> on(n_, false);
  // each simple cycle once, rooted at its smallest vertex
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t root, std::size_t v) {
    for (std::size_t j = root; j < n_; ++j) {
      if (!live(v, j)) continue;
      if (j == root) {
        Cycle c{trail, 1};
        for (std::size_t t = 0; t < trail.size(); ++t) {
          const auto a = trail[t], b = trail[(t + 1) % trail.size()];
          c.ratio *= Rational(k_.B[a][b], k_.A[a][b]);
        }
        c.ratio.canonicalize();
        out.push_back(std::move(c));
      } else if (!on[j]) {
        on[j] = true;
        trail.push_back(j);
        dfs(root, j);
        trail.pop_back();
        on[j] = false;
      }
    }
  };
  for (std::size_t r = 0; r < n_; ++r) {
    on[r] = true;
    trail = {r};
    dfs(r, r);
    on[r] = false;
  }
  return out;
}

Truth KatsuraAnalysis::hausdorff() const {
  if (pseudo_free()) return Truth::Yes;
  // vertices from which live steps lead to a pair (i, j) with A_ij > 0 and B_ij = 0
  std::vector<bool> feeds(n_, false);
  for (std::size_t v = 0; v < n_; ++v) {
    auto r = live_reach(v);
    for (std::size_t i = 0; i < n_ && !feeds[v]; ++i)
      if (r[i])
        for (std::size_t j = 0; j < n_; ++j)
          if (edge(i, j) && k_.B[i][j] == 0) feeds[v] = true;
  }
  std::vector<Cycle> cycles;
  for (auto& c : live_cycles())
    if (std::all_of(c.vertices.begin(), c.vertices.end(), [&](std::size_t v) { return feeds[v]; })) cycles.push_back(c);
  if (cycles.empty()) return Truth::Yes;
  if (cycles.size() > 20) return Truth::Unknown;
  std::set<BigInt> primes;
  for (auto& c : cycles) {
    for (auto& p : prime_divisors(c.ratio.get_num())) primes.insert(p);
    for (auto& p : prime_divisors(c.ratio.get_den())) primes.insert(p);
  }
  const std::size_t m = cycles.size();
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t c = 0; c < m; ++c)
      if (mask >> c & 1) pick.push_back(c);
    // cycles glued along shared vertices form one closed walk
    std::vector<bool> joined(pick.size(), false);
    joined[0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t a = 0; a < pick.size(); ++a) {
        if (joined[a]) continue;
        for (std::size_t b = 0; b < pick.size() && !joined[a]; ++b) {
          if (!joined[b]) continue;
          const auto& va = cycles[pick[a]].vertices;
          const auto& vb = cycles[pick[b]].vertices;
          if (std::any_of(va.begin(), va.end(), [&](std::size_t v) { return std::find(vb.begin(), vb.end(), v) != vb.end(); })) {
            joined[a] = true;
            grew = true;
          }
        }
      }
    }
    if (!std::all_of(joined.begin(), joined.end(), [](bool b) { return b; })) continue;
    // c_k = 1 + y_k >= 1 and sum_k c_k v_p(ratio_k) - s_p = 0
    const std::size_t nv = pick.size() + primes.size();
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::size_t pi = 0;
    for (const auto& p : primes) {
      std::vector<Rational> row(nv, 0);
      Rational rhs = 0;
      for (std::size_t c = 0; c < pick.size(); ++c) {
        const auto& r = cycles[pick[c]].ratio;
        long w = valuation(r.get_num(), p) - valuation(r.get_den(), p);
        row[c] = w;
        rhs -= w;
      }
      row[pick.size() + pi++] = -1;
      A.push_back(std::move(row));
      b.push_back(rhs);
    }
    if (primes.empty() || feasible_point(A, b)) return Truth::No;
  }
  return Truth::Yes;
}

bool KatsuraAnalysis::slack_condition() const {
  const auto cycles = live_cycles();
  for (std::size_t i = 0; i < n_; ++i) {
    const auto reach = live_reach(i);
    bool any = false, escapes = false;
    for (const auto& c : cycles) {
      if (!reach[c.vertices.front()]) continue;
      any = true;
      if (c.ratio.get_den() != 1) escapes = true;
    }
    // no cycle: every path from i meets B = 0 in bounded time; a non-integral
    // cycle: no l != 0 fixes Z(i); otherwise some l fixes Z(i) without being slack
    if (any && !escapes) return false;
  }
  return true;
}

Truth KatsuraAnalysis::essentially_principal() const { return truth(condition_l() && slack_condition()); }

Truth KatsuraAnalysis::sufficient_ep() const {
  if (!condition_l()) return Truth::Unknown;
  const auto cycles = live_cycles();
  for (std::size_t i = 0; i < n_; ++i) {
    const auto reach = live_reach(i);
    const bool ok = std::any_of(cycles.begin(), cycles.end(),
                                [&](const Cycle& c) { return reach[c.vertices.front()] && abs(c.ratio) < 1; });
    if (!ok) return Truth::Unknown;
  }
  return Truth::Yes;
}

Truth KatsuraAnalysis::simple() const {
  if (hausdorff() != Truth::Yes) return Truth::Unknown;
  return truth(minimal() && condition_l() && slack_condition());
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMatrix out(r, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < k; ++m)
      if (a[i][m] != 0)
        for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][m] * b[m][j];
  return out;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  SmithForm f{identity_matrix(rows), M, identity_matrix(cols)};
  auto& S = f.S;
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // row dst -= q row src
    for (std::size_t j = 0; j < cols; ++j) S[dst][j] -= q * S[src][j];
    for (std::size_t j = 0; j < rows; ++j) f.U[dst][j] -= q * f.U[src][j];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {  // col dst -= q col src
    for (std::size_t i = 0; i < rows; ++i) S[i][dst] -= q * S[i][src];
    for (std::size_t i = 0; i < cols; ++i) f.V[i][dst] -= q * f.V[i][src];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(S[a], S[b]);
    std::swap(f.U[a], f.U[b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (auto& r : S) std::swap(r[a], r[b]);
    for (auto& r : f.V) std::swap(r[a], r[b]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S[i][j] != 0 && (pi == rows || abs(S[i][j]) < abs(S[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S[i][t] == 0) continue;
        BigInt q, r;
        floor_divmod(S[i][t], S[t][t], q, r);
        row_add(i, t, q);
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S[t][j] == 0) continue;
        BigInt q, r;
        floor_divmod(S[t][j], S[t][t], q, r);
        col_add(j, t, q);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S[i][j].get_mpz_t(), S[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_add(t, bad, -1);
    }
    if (S[t][t] < 0) {
      for (auto& v : S[t]) v = -v;
      for (auto& v : f.U[t]) v = -v;
    }
  }
  return f;
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

AbelianGroup cokernel(const IntMatrix& M) {
  const auto f = smith_normal_form(M);
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  AbelianGroup g;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (f.S[t][t] == 0) continue;
    ++rank;
    if (f.S[t][t] > 1) g.torsion.push_back(f.S[t][t]);
  }
  g.free_rank = rows - rank;
  return g;
}

std::size_t kernel_rank(const IntMatrix& M) {
  const auto f = smith_normal_form(M);
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    if (f.S[t][t] != 0) ++rank;
  return cols - rank;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  // re-derive invariant factors from the diagonal of both torsion parts
  std::size_t n = a.torsion.size() + b.torsion.size();
  IntMatrix d(n, std::vector<BigInt>(n, 0));
  std::size_t i = 0;
  for (const auto& t : a.torsion) d[i][i] = t, ++i;
  for (const auto& t : b.torsion) d[i][i] = t, ++i;
  AbelianGroup g = cokernel(d);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

KGroups k_theory(const KatsuraData& k) {
  validate_katsura(k);
  const std::size_t n = k.A.size();
  IntMatrix ia = identity_matrix(n), ib = identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ia[i][j] -= k.A[i][j];
      ib[i][j] -= k.B[i][j];
    }
  KGroups out;
  out.K0 = direct_sum(cokernel(ia), AbelianGroup{kernel_rank(ib), {}});
  out.K1 = direct_sum(cokernel(ib), AbelianGroup{kernel_rank(ia), {}});
  return out;
}

}  // namespace ssg
