#pragma once

// Reference computations used only by the tests. None of these call into the
// normal-form engine or the Weyl enumeration.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Rank of integer vectors reduced mod a prime p.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto norm = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a = norm(a);
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && norm(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto s = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = norm(x) * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || norm(rows[r][c]) == 0) continue;
      const auto f = norm(rows[r][c]);
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = norm(rows[r][k] - f * rows[rank][k]);
    }
    ++rank;
  }
  return rank;
}

/// A quiver given by (source, target) pairs over vertices 0..n-1.
struct SmallQuiver {
  int n;
  std::vector<std::pair<int, int>> arrows;
};

/// Graded dimensions of the preprojective algebra of q over F_p, degree by
/// degree, by quotienting the path space of the double quiver by the span of
/// p r q for the vertex relations r. Stops at the first zero degree.
inline std::vector<std::size_t> preprojective_graded_dims(const SmallQuiver& q, std::int64_t p, int max_degree = 30) {
  // double quiver: arrow k and its reverse k + m
  const int m = static_cast<int>(q.arrows.size());
  std::vector<std::pair<int, int>> arrows = q.arrows;
  for (const auto& [s, t] : q.arrows) arrows.push_back({t, s});
  using Word = std::vector<int>;  // traversal order: first element is traversed first
  auto src = [&](const Word& w, int v) { return w.empty() ? v : arrows[w.front()].first; };
  auto tgt = [&](const Word& w, int v) { return w.empty() ? v : arrows[w.back()].second; };
  // paths[d] = list of (word, start vertex)
  std::vector<std::vector<std::pair<Word, int>>> paths(1);
  for (int v = 0; v < q.n; ++v) paths[0].push_back({{}, v});
  // relation at vertex v: sum over arrows ending at v of (arrow then reverse) minus
  // sum over arrows starting at v of (reverse then arrow), as traversal words.
  std::vector<std::vector<std::pair<Word, int>>> relations(q.n);
  for (int k = 0; k < m; ++k) {
    const auto [s, t] = q.arrows[k];
    relations[t].push_back({{k + m, k}, +1});   // t -> s -> t : traverse reverse first
    relations[s].push_back({{k, k + m}, -1});   // s -> t -> s
  }
  std::vector<std::size_t> dims{static_cast<std::size_t>(q.n)};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, v] : paths[d - 1])
      for (int a = 0; a < 2 * m; ++a)
        if (arrows[a].first == tgt(w, v)) {
          auto x = w;
          x.push_back(a);
          next.push_back({x, v});
        }
    paths.push_back(next);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < next.size(); ++i) index[next[i].first] = i;
    std::vector<std::vector<std::int64_t>> rows;
    if (d >= 2)
      for (int before = 0; before <= d - 2; ++before)
        for (const auto& [pre, pv] : paths[before])
          for (const auto& [post, qv] : paths[d - 2 - before]) {
            const int v = tgt(pre, pv);
            if (src(post, qv) != v) continue;
            std::vector<std::int64_t> row(next.size(), 0);
            for (const auto& [mid, sign] : relations[v]) {
              Word w = pre;
              w.insert(w.end(), mid.begin(), mid.end());
              w.insert(w.end(), post.begin(), post.end());
              row[index.at(w)] += sign;
            }
            rows.push_back(row);
          }
    const auto dim = next.size() - rank_mod_p(rows, p);
    if (dim == 0) break;
    dims.push_back(dim);
  }
  return dims;
}

inline std::size_t total(const std::vector<std::size_t>& dims) {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

/// Order of the Weyl group of a Cartan matrix: generate the real roots by
/// reflecting simple roots, then close the simple reflections as
/// permutations of the root set.
inline std::size_t weyl_order(const std::vector<std::vector<int>>& c, std::size_t root_cap = 2000) {
  const auto n = c.size();
  using Root = std::vector<long>;
  auto reflect = [&](std::size_t i, Root r) {
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with <alpha_j, alpha_i^vee> = c_ij
    long pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += r[j] * c[i][j];
    r[i] -= pairing;
    return r;
  };
  std::vector<Root> roots;
  std::map<Root, std::size_t> id;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    id[r] = roots.size();
    roots.push_back(r);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots.size() > root_cap) return 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto r = reflect(i, roots[k]);
      if (!id.count(r)) {
        id[r] = roots.size();
        roots.push_back(r);
      }
    }
  }
  using Perm = std::vector<std::size_t>;
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Perm g(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) g[k] = id.at(reflect(i, roots[k]));
    gens.push_back(g);
  }
  Perm e(roots.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = k;
  std::set<Perm> seen{e};
  std::vector<Perm> frontier{e};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) y[k] = g[x[k]];
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace oracle
