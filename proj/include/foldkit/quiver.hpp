#pragma once

// Quivers, groups of quiver automorphisms, orbits and stabilizers, the folding
// construction (quiver with group action -> Cartan triple) and the quivers
// Q(C, Omega) / Q~(C, Omega) attached to a Cartan triple.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foldkit/error.hpp"

namespace foldkit {

struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  Quiver() = default;

  explicit Quiver(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!vertex_index_.emplace(vertices_[i], i).second)
        fail(ErrorKind::InvalidInput, "duplicate vertex id '" + vertices_[i] + "'");
  }

  Quiver(std::vector<std::string> vertices,
         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
      : Quiver(std::move(vertices)) {
    for (const auto& [id, from, to] : arrows) add_arrow(id, from, to);
  }

  std::size_t add_arrow(const std::string& id, const std::string& from, const std::string& to) {
    return add_arrow(id, vertex_index(from), vertex_index(to));
  }

  std::size_t add_arrow(const std::string& id, std::size_t source, std::size_t target) {
    if (source >= vertices_.size() || target >= vertices_.size())
      fail(ErrorKind::InvalidInput, "arrow '" + id + "' has an undeclared endpoint");
    if (!arrow_index_.emplace(id, arrows_.size()).second)
      fail(ErrorKind::InvalidInput, "duplicate arrow id '" + id + "'");
    arrows_.push_back({id, source, target});
    return arrows_.size() - 1;
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::size_t vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) fail(ErrorKind::InvalidInput, "unknown vertex '" + id + "'");
    return it->second;
  }
  std::size_t arrow_index(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) fail(ErrorKind::InvalidInput, "unknown arrow '" + id + "'");
    return it->second;
  }
  bool has_arrow(const std::string& id) const { return arrow_index_.count(id) != 0; }

  /// No directed cycle (loops count as cycles).
  bool is_acyclic() const {
    std::vector<std::size_t> indegree(vertices_.size(), 0);
    std::vector<std::vector<std::size_t>> out(vertices_.size());
    for (const auto& a : arrows_) {
      ++indegree[a.target];
      out[a.source].push_back(a.target);
    }
    std::queue<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (indegree[v] == 0) ready.push(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      auto v = ready.front();
      ready.pop();
      ++seen;
      for (auto w : out[v])
        if (--indegree[w] == 0) ready.push(w);
    }
    return seen == vertices_.size();
  }

  void require_acyclic() const {
    if (!is_acyclic()) fail(ErrorKind::NotAcyclic, "quiver has a directed cycle");
  }

  /// Number of arrows between i and j in either direction.
  std::size_t arrows_between(std::size_t i, std::size_t j) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow& a) {
      return (a.source == i && a.target == j) || (a.source == j && a.target == i);
    }));
  }

  /// Symmetric generalized Cartan matrix: 2 on the diagonal, minus the number
  /// of arrows between i and j off it.
  std::vector<std::vector<int>> cartan_matrix() const {
    const auto n = vertices_.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    for (const auto& a : arrows_) {
      if (a.source == a.target) fail(ErrorKind::NotAcyclic, "loop '" + a.id + "' has no Cartan entry");
      --c[a.source][a.target];
      --c[a.target][a.source];
    }
    return c;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
};

struct DoubleQuiver {
  Quiver quiver;
  /// star[a] is the partner arrow: alpha <-> alpha*.
  std::vector<std::size_t> star;
  /// Arrows of the original quiver occupy indices [0, original_arrows).
  std::size_t original_arrows = 0;
};

/// Adds alpha*: t(alpha) -> s(alpha) with id "<id>*" for every arrow.
inline DoubleQuiver double_quiver(const Quiver& q) {
  DoubleQuiver d{q, {}, q.arrow_count()};
  const auto m = q.arrow_count();
  d.star.resize(2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& arrow = q.arrow(a);
    auto b = d.quiver.add_arrow(arrow.id + "*", arrow.target, arrow.source);
    d.star[a] = b;
    d.star[b] = a;
  }
  return d;
}

/// A pair of permutations of Q_0 and Q_1 compatible with s and t.
struct QuiverAutomorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> arrow_map;

  static QuiverAutomorphism identity(const Quiver& q) {
    QuiverAutomorphism g;
    g.vertex_map.resize(q.vertex_count());
    g.arrow_map.resize(q.arrow_count());
    std::iota(g.vertex_map.begin(), g.vertex_map.end(), 0);
    std::iota(g.arrow_map.begin(), g.arrow_map.end(), 0);
    return g;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < vertex_map.size(); ++i)
      if (vertex_map[i] != i) return false;
    for (std::size_t i = 0; i < arrow_map.size(); ++i)
      if (arrow_map[i] != i) return false;
    return true;
  }

  /// (*this) after `h`: x -> this(h(x)).
  QuiverAutomorphism after(const QuiverAutomorphism& h) const {
    QuiverAutomorphism r;
    r.vertex_map.resize(vertex_map.size());
    r.arrow_map.resize(arrow_map.size());
    for (std::size_t i = 0; i < vertex_map.size(); ++i) r.vertex_map[i] = vertex_map[h.vertex_map[i]];
    for (std::size_t i = 0; i < arrow_map.size(); ++i) r.arrow_map[i] = arrow_map[h.arrow_map[i]];
    return r;
  }

  QuiverAutomorphism inverse() const {
    QuiverAutomorphism r;
    r.vertex_map.resize(vertex_map.size());
    r.arrow_map.resize(arrow_map.size());
    for (std::size_t i = 0; i < vertex_map.size(); ++i) r.vertex_map[vertex_map[i]] = i;
    for (std::size_t i = 0; i < arrow_map.size(); ++i) r.arrow_map[arrow_map[i]] = i;
    return r;
  }

  /// Extension to the double quiver with g(alpha*) = g(alpha)*.
  QuiverAutomorphism on_double(const DoubleQuiver& d) const {
    QuiverAutomorphism r;
    r.vertex_map = vertex_map;
    r.arrow_map.resize(d.quiver.arrow_count());
    for (std::size_t a = 0; a < d.original_arrows; ++a) {
      r.arrow_map[a] = arrow_map[a];
      r.arrow_map[d.star[a]] = d.star[arrow_map[a]];
    }
    return r;
  }

  friend bool operator==(const QuiverAutomorphism&, const QuiverAutomorphism&) = default;
  friend auto operator<=>(const QuiverAutomorphism&, const QuiverAutomorphism&) = default;
};

inline void validate_automorphism(const Quiver& q, const QuiverAutomorphism& g) {
  auto is_perm = [](const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
      if (x >= p.size() || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (g.vertex_map.size() != q.vertex_count() || g.arrow_map.size() != q.arrow_count() ||
      !is_perm(g.vertex_map) || !is_perm(g.arrow_map))
    fail(ErrorKind::ActionInvalid, "automorphism is not a pair of permutations");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& src = q.arrow(a);
    const auto& img = q.arrow(g.arrow_map[a]);
    if (g.vertex_map[src.source] != img.source || g.vertex_map[src.target] != img.target)
      fail(ErrorKind::ActionInvalid, "automorphism does not commute with s,t on arrow '" + src.id + "'");
  }
}

/// A finite group of quiver automorphisms, stored as its full element list.
/// Element 0 is the identity; `product(g, h)` is the index of g after h.
class GroupAction {
 public:
  static constexpr std::size_t kDefaultElementCap = 10000;

  GroupAction(const Quiver& q, std::vector<QuiverAutomorphism> generators,
              std::size_t element_cap = kDefaultElementCap)
      : generators_(std::move(generators)) {
    for (const auto& g : generators_) validate_automorphism(q, g);
    elements_.push_back(QuiverAutomorphism::identity(q));
    std::map<QuiverAutomorphism, std::size_t> index{{elements_[0], 0}};
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& g : generators_) {
        auto next = g.after(elements_[i]);
        if (index.emplace(next, elements_.size()).second) {
          elements_.push_back(std::move(next));
          if (elements_.size() > element_cap)
            fail(ErrorKind::CapExceeded, "group closure exceeds " + std::to_string(element_cap) + " elements");
        }
      }
    }
    const auto m = elements_.size();
    table_.assign(m, std::vector<std::size_t>(m));
    inverse_.resize(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        table_[a][b] = index.at(elements_[a].after(elements_[b]));
        if (table_[a][b] == 0) inverse_[a] = b;
      }
    for (std::size_t a = 0; a < m; ++a) {
      std::size_t k = 1, x = a;
      while (x != 0) {
        x = table_[a][x];
        ++k;
      }
      if (k == m) {
        cyclic_generator_ = a;
        break;
      }
    }
  }

  /// The trivial group acting on q.
  static GroupAction trivial(const Quiver& q) { return GroupAction(q, {}); }

  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<QuiverAutomorphism>& elements() const noexcept { return elements_; }
  const std::vector<QuiverAutomorphism>& generators() const noexcept { return generators_; }
  const QuiverAutomorphism& element(std::size_t i) const { return elements_.at(i); }
  std::size_t product(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  bool is_cyclic() const noexcept { return cyclic_generator_.has_value(); }
  /// Index of an element generating the whole group, when it is cyclic.
  std::optional<std::size_t> cyclic_generator() const noexcept { return cyclic_generator_; }

 private:
  std::vector<QuiverAutomorphism> generators_;
  std::vector<QuiverAutomorphism> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::optional<std::size_t> cyclic_generator_;
};

struct OrbitData {
  /// Orbits ordered by the position of their first member in Q_0; members ascending.
  std::vector<std::vector<std::size_t>> vertex_orbits;
  std::vector<std::size_t> vertex_orbit_of;
  std::vector<std::vector<std::size_t>> arrow_orbits;
  std::vector<std::size_t> arrow_orbit_of;
  /// Stabilizers as sorted lists of group element indices.
  std::vector<std::vector<std::size_t>> vertex_stabilizers;
  std::vector<std::vector<std::size_t>> arrow_stabilizers;
  /// "o_" followed by the lexicographically least member id.
  std::vector<std::string> orbit_names;
};

inline OrbitData orbits_and_stabilizers(const Quiver& q, const GroupAction& action) {
  OrbitData d;
  auto partition = [&](std::size_t count, auto image, std::vector<std::vector<std::size_t>>& orbits,
                       std::vector<std::size_t>& orbit_of, std::vector<std::vector<std::size_t>>& stab) {
    orbit_of.assign(count, static_cast<std::size_t>(-1));
    stab.assign(count, {});
    for (std::size_t x = 0; x < count; ++x) {
      for (std::size_t g = 0; g < action.order(); ++g)
        if (image(action.element(g), x) == x) stab[x].push_back(g);
      if (orbit_of[x] != static_cast<std::size_t>(-1)) continue;
      std::set<std::size_t> orbit;
      for (const auto& g : action.elements()) orbit.insert(image(g, x));
      for (auto y : orbit) orbit_of[y] = orbits.size();
      orbits.emplace_back(orbit.begin(), orbit.end());
    }
  };
  partition(q.vertex_count(), [](const QuiverAutomorphism& g, std::size_t v) { return g.vertex_map[v]; },
            d.vertex_orbits, d.vertex_orbit_of, d.vertex_stabilizers);
  partition(q.arrow_count(), [](const QuiverAutomorphism& g, std::size_t a) { return g.arrow_map[a]; },
            d.arrow_orbits, d.arrow_orbit_of, d.arrow_stabilizers);
  for (const auto& orbit : d.vertex_orbits) {
    std::string least = q.vertex_id(orbit.front());
    for (auto v : orbit) least = std::min(least, q.vertex_id(v));
    d.orbit_names.push_back("o_" + least);
  }
  return d;
}

/// G_alpha = G_{s(alpha)} ∩ G_{t(alpha)} for every arrow.
inline bool check_star_condition(const Quiver& q, const GroupAction& action) {
  const auto d = orbits_and_stabilizers(q, action);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& s = d.vertex_stabilizers[q.arrow(a).source];
    const auto& t = d.vertex_stabilizers[q.arrow(a).target];
    std::vector<std::size_t> both;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
    if (both != d.arrow_stabilizers[a]) return false;
  }
  return true;
}

/// Symmetrizable generalized Cartan matrix C with symmetrizer D and acyclic
/// orientation Omega, all indexed by `index`.
struct CartanTriple {
  std::vector<std::string> index;
  std::vector<std::vector<int>> C;
  std::vector<int> D;
  std::vector<std::pair<std::size_t, std::size_t>> omega;

  std::size_t rank() const noexcept { return index.size(); }

  bool in_omega(std::size_t i, std::size_t j) const {
    return std::find(omega.begin(), omega.end(), std::pair{i, j}) != omega.end();
  }

  /// Throws InvalidTriple naming the first violated axiom.
  void validate() const {
    const auto n = index.size();
    auto bad = [](const std::string& what) { fail(ErrorKind::InvalidTriple, what); };
    if (C.size() != n || D.size() != n) bad("matrix sizes do not match the index set");
    for (const auto& row : C)
      if (row.size() != n) bad("C is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (C[i][i] != 2) bad("(C1) c_ii != 2 at " + index[i]);
      if (D[i] <= 0) bad("symmetrizer entry at " + index[i] + " is not positive");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (C[i][j] > 0) bad("(C2) positive off-diagonal entry");
        if ((C[i][j] < 0) != (C[j][i] < 0)) bad("(C2) sign pattern is not symmetric");
        if (D[i] * C[i][j] != D[j] * C[j][i]) bad("(C3) DC is not symmetric");
      }
    }
    for (const auto& [i, j] : omega) {
      if (i >= n || j >= n) bad("Omega refers to an unknown index");
      if (i == j) bad("(O2) Omega contains a loop");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool present = in_omega(i, j) || in_omega(j, i);
        if (present != (C[i][j] < 0)) bad("(O1) violated for (" + index[i] + "," + index[j] + ")");
        if (in_omega(i, j) && in_omega(j, i)) bad("(O2) both orientations present");
      }
    // (O2): no directed cycle in Omega.
    Quiver orient(index);
    for (const auto& [i, j] : omega) orient.add_arrow(index[i] + ">" + index[j], i, j);
    if (!orient.is_acyclic()) bad("(O2) Omega has a directed cycle");
  }
};

inline std::size_t cartan_index(const CartanTriple& t, const std::string& label) {
  auto it = std::find(t.index.begin(), t.index.end(), label);
  if (it == t.index.end()) fail(ErrorKind::UnknownLabel, "no index '" + label + "'");
  return static_cast<std::size_t>(it - t.index.begin());
}

/// Cartan triple of a quiver with trivial symmetrizer: (j,i) in Omega iff
/// there is an arrow i -> j.
inline CartanTriple symmetric_triple(const Quiver& q) {
  q.require_acyclic();
  CartanTriple t;
  t.index = q.vertices();
  t.C = q.cartan_matrix();
  t.D.assign(q.vertex_count(), 1);
  std::set<std::pair<std::size_t, std::size_t>> om;
  for (const auto& a : q.arrows()) om.insert({a.target, a.source});
  t.omega.assign(om.begin(), om.end());
  t.validate();
  return t;
}

/// Folding: orbits become the index set, c_{ij} = -N_{ij}/|j|, c_i = |G|/|i|,
/// and (j, i) in Omega iff some arrow runs from orbit i to orbit j.
inline CartanTriple fold(const Quiver& q, const GroupAction& action) {
  q.require_acyclic();
  const auto d = orbits_and_stabilizers(q, action);
  const auto n = d.vertex_orbits.size();
  const auto group_order = static_cast<int>(action.order());
  CartanTriple t;
  t.index = d.orbit_names;
  t.C.assign(n, std::vector<int>(n, 0));
  t.D.resize(n);
  std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
  std::set<std::pair<std::size_t, std::size_t>> om;
  for (const auto& a : q.arrows()) {
    const auto from = d.vertex_orbit_of[a.source];
    const auto to = d.vertex_orbit_of[a.target];
    if (from == to)
      fail(ErrorKind::NotAcyclic, "arrow '" + a.id + "' joins two vertices of one orbit");
    ++count[from][to];
    ++count[to][from];
    om.insert({to, from});
  }
  for (const auto& [j, i] : om)
    if (om.count({i, j}))
      fail(ErrorKind::MixedOrientation, "arrows run both ways between " + t.index[i] + " and " + t.index[j]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto size_i = static_cast<int>(d.vertex_orbits[i].size());
    if (group_order % size_i != 0)
      fail(ErrorKind::NonIntegralFold, "orbit size does not divide |G| at " + t.index[i]);
    t.D[i] = group_order / size_i;
    t.C[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto size_j = static_cast<int>(d.vertex_orbits[j].size());
      if (count[i][j] % size_j != 0)
        fail(ErrorKind::NonIntegralFold, "|" + t.index[j] + "| does not divide N(" + t.index[i] + "," + t.index[j] + ")");
      t.C[i][j] = -count[i][j] / size_j;
    }
  }
  t.omega.assign(om.begin(), om.end());
  t.validate();
  return t;
}

struct CartanArrowLabel {
  std::size_t i;
  std::size_t j;
  int g;  // 1-based multiplicity index
};

/// Q(C, Omega) or its tilde variant. Arrow alpha(i,j,g) runs j -> i.
struct CartanQuiver {
  Quiver quiver;
  std::vector<std::size_t> loop;  // eps_i per vertex
  std::vector<std::optional<CartanArrowLabel>> label;  // nullopt for loops
  std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> arrow_of;
};

inline int positive_gcd(int a, int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline CartanQuiver quiver_of_cartan(const CartanTriple& t, bool tilde) {
  t.validate();
  CartanQuiver cq{Quiver(t.index), {}, {}, {}};
  for (std::size_t i = 0; i < t.rank(); ++i) {
    cq.loop.push_back(cq.quiver.add_arrow("eps(" + t.index[i] + ")", i, i));
    cq.label.push_back(std::nullopt);
  }
  auto add = [&](std::size_t i, std::size_t j, int g) {
    auto a = cq.quiver.add_arrow("alpha(" + t.index[i] + "," + t.index[j] + "," + std::to_string(g) + ")", j, i);
    cq.label.push_back(CartanArrowLabel{i, j, g});
    cq.arrow_of[{i, j, g}] = a;
  };
  for (const auto& [i, j] : t.omega) {
    const int multiplicity = positive_gcd(t.C[i][j], t.C[j][i]);
    for (int g = 1; g <= multiplicity; ++g) {
      add(i, j, g);
      if (tilde) add(j, i, g);
    }
  }
  return cq;
}

}  // namespace foldkit
