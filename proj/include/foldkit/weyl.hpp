#pragma once

// Weyl groups of generalized Cartan matrices, realized by integer matrices on
// the root lattice, and the Weyl (0-Hecke) monoid realized through the
// Demazure product on the same carriers.
//
// Convention: r_i(alpha_j) = alpha_j - c_ij alpha_i. The transposed
// convention gives an isomorphic group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/quiver.hpp"

namespace foldkit {

using CartanMatrix = std::vector<std::vector<int>>;

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> a;

  static IntMatrix identity(std::size_t n) {
    IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  IntMatrix operator*(const IntMatrix& o) const {
    IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const auto x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < n; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }

  std::int64_t determinant() const {
    // Bareiss fraction-free elimination.
    if (n == 0) return 1;
    std::vector<std::int64_t> m = a;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k * n + k] == 0) {
        std::size_t swap = k + 1;
        while (swap < n && m[swap * n + k] == 0) ++swap;
        if (swap == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept {
    std::size_t h = m.n;
    for (auto x : m.a) h = h * 1000003u ^ std::hash<std::int64_t>{}(x);
    return h;
  }
};

/// Checks (C1) and (C2) and that some positive diagonal D makes DC symmetric.
inline std::optional<std::vector<int>> find_symmetrizer(const CartanMatrix& c) {
  const auto n = c.size();
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    num[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        // d_j c_ji = d_i c_ij  =>  d_j = d_i c_ij / c_ji
        std::int64_t nj = num[i] * c[i][j], dj = den[i] * c[j][i];
        if (dj < 0) nj = -nj, dj = -dj;
        auto g = std::gcd(nj, dj);
        nj /= g, dj /= g;
        if (!seen[j]) {
          seen[j] = true;
          num[j] = nj, den[j] = dj;
          stack.push_back(j);
        } else if (num[j] != nj || den[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  std::int64_t lcm = 1;
  for (auto d : den) lcm = std::lcm(lcm, d);
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (lcm / den[i]));
  return d;
}

inline void validate_cartan(const CartanMatrix& c) {
  const auto n = c.size();
  for (const auto& row : c)
    if (row.size() != n) fail(ErrorKind::InvalidTriple, "Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) fail(ErrorKind::InvalidTriple, "(C1) diagonal entry != 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (c[i][j] > 0 || (c[i][j] < 0) != (c[j][i] < 0)))
        fail(ErrorKind::InvalidTriple, "(C2) violated");
  }
  if (!find_symmetrizer(c)) fail(ErrorKind::InvalidTriple, "(C3) no symmetrizer exists");
}

/// Matrix of r_i in the simple-root basis: column j is r_i(alpha_j).
inline IntMatrix simple_reflection_matrix(const CartanMatrix& c, std::size_t i) {
  validate_cartan(c);
  const auto n = c.size();
  auto m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(i, j) -= c[i][j];
  return m;
}

/// Order of r_i r_j dictated by c_ij c_ji (0 means infinite).
inline int coxeter_exponent(const CartanMatrix& c, std::size_t i, std::size_t j) {
  if (i == j) return 1;
  switch (c[i][j] * c[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

/// An enumerated finite Weyl group. Element 0 is the identity; elements are
/// listed in breadth-first order so lengths are non-decreasing.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultElementCap = 100000;

  WeylGroup(CartanMatrix c, std::vector<std::string> labels, std::size_t element_cap = kDefaultElementCap)
      : cartan_(std::move(c)), labels_(std::move(labels)) {
    validate_cartan(cartan_);
    const auto n = cartan_.size();
    if (labels_.empty())
      for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
    if (labels_.size() != n) fail(ErrorKind::InvalidInput, "one label per generator");
    for (std::size_t i = 0; i < n; ++i) reflections_.push_back(simple_reflection_matrix(cartan_, i));
    add(IntMatrix::identity(n), 0);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        auto next = elements_[k] * reflections_[i];
        if (!index_.count(next)) {
          if (elements_.size() >= element_cap)
            fail(ErrorKind::CapExceeded, "Weyl group exceeds " + std::to_string(element_cap) +
                                             " elements (not of finite type?)");
          add(std::move(next), lengths_[k] + 1);
        }
      }
    }
    right_.assign(elements_.size(), std::vector<std::size_t>(n));
    left_.assign(elements_.size(), std::vector<std::size_t>(n));
    for (std::size_t k = 0; k < elements_.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) {
        right_[k][i] = index_.at(elements_[k] * reflections_[i]);
        left_[k][i] = index_.at(reflections_[i] * elements_[k]);
      }
  }

  /// W(Q) via the symmetric Cartan matrix of a quiver.
  static WeylGroup of_quiver(const Quiver& q, std::size_t element_cap = kDefaultElementCap) {
    return WeylGroup(q.cartan_matrix(), q.vertices(), element_cap);
  }

  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  std::size_t order() const noexcept { return elements_.size(); }
  const IntMatrix& matrix(std::size_t w) const { return elements_.at(w); }
  const IntMatrix& reflection(std::size_t i) const { return reflections_.at(i); }
  std::size_t length(std::size_t w) const { return lengths_.at(w); }
  std::size_t identity() const noexcept { return 0; }
  std::size_t generator(std::size_t i) const { return right_[0][i]; }
  std::size_t right_multiply(std::size_t w, std::size_t i) const { return right_[w][i]; }
  std::size_t left_multiply(std::size_t w, std::size_t i) const { return left_[w][i]; }

  std::optional<std::size_t> find(const IntMatrix& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_right_descent(std::size_t w, std::size_t i) const { return lengths_[right_[w][i]] < lengths_[w]; }
  bool is_left_descent(std::size_t w, std::size_t i) const { return lengths_[left_[w][i]] < lengths_[w]; }

  std::vector<std::size_t> right_descents(std::size_t w) const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rank(); ++i)
      if (is_right_descent(w, i)) d.push_back(i);
    return d;
  }
  std::vector<std::size_t> left_descents(std::size_t w) const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rank(); ++i)
      if (is_left_descent(w, i)) d.push_back(i);
    return d;
  }

  std::size_t multiply(std::size_t u, std::size_t v) const { return evaluate(reduced_word(v), u); }

  /// Product of a word, starting from `start` and multiplying on the right.
  std::size_t evaluate(const std::vector<std::size_t>& word, std::size_t start = 0) const {
    for (auto i : word) start = right_[start][i];
    return start;
  }

  /// Greedy left-descent stripping.
  std::vector<std::size_t> reduced_word(std::size_t w) const {
    std::vector<std::size_t> word;
    while (lengths_[w] > 0) {
      std::size_t i = 0;
      while (!is_left_descent(w, i)) ++i;
      word.push_back(i);
      w = left_[w][i];
    }
    return word;
  }

  /// Every reduced word of w, in lexicographic order.
  std::vector<std::vector<std::size_t>> all_reduced_words(std::size_t w) const {
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
    std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> go =
        [&](std::size_t x) -> const std::vector<std::vector<std::size_t>>& {
      if (auto it = memo.find(x); it != memo.end()) return it->second;
      std::vector<std::vector<std::size_t>> out;
      if (lengths_[x] == 0) {
        out.push_back({});
      } else {
        for (auto i : left_descents(x))
          for (const auto& tail : go(left_[x][i])) {
            std::vector<std::size_t> word{i};
            word.insert(word.end(), tail.begin(), tail.end());
            out.push_back(std::move(word));
          }
      }
      return memo.emplace(x, std::move(out)).first->second;
    };
    return go(w);
  }

  bool is_reduced(const std::vector<std::size_t>& word) const { return length(evaluate(word)) == word.size(); }

  std::size_t longest_element() const {
    return static_cast<std::size_t>(std::max_element(lengths_.begin(), lengths_.end()) - lengths_.begin());
  }

  /// u * r_i if that increases the length, u otherwise.
  std::size_t demazure_step(std::size_t u, std::size_t i) const {
    const auto next = right_[u][i];
    return lengths_[next] > lengths_[u] ? next : u;
  }

  /// Monoid product in WM: fold a reduced word of v into u.
  std::size_t demazure_product(std::size_t u, std::size_t v) const {
    for (auto i : reduced_word(v)) u = demazure_step(u, i);
    return u;
  }

  /// rho: left-to-right Demazure fold of any word from the identity.
  std::size_t rho(const std::vector<std::size_t>& word) const {
    std::size_t u = 0;
    for (auto i : word) u = demazure_step(u, i);
    return u;
  }

  /// Length histogram indexed by length.
  std::vector<std::size_t> length_histogram() const {
    std::vector<std::size_t> h(lengths_.empty() ? 0 : *std::max_element(lengths_.begin(), lengths_.end()) + 1, 0);
    for (auto l : lengths_) ++h[l];
    return h;
  }

 private:
  void add(IntMatrix m, std::size_t length) {
    index_.emplace(m, elements_.size());
    elements_.push_back(std::move(m));
    lengths_.push_back(length);
  }

  CartanMatrix cartan_;
  std::vector<std::string> labels_;
  std::vector<IntMatrix> reflections_;
  std::vector<IntMatrix> elements_;
  std::vector<std::size_t> lengths_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> index_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
};

/// An element of WM realized on the carrier of W.
struct WeylMonoidElement {
  std::size_t carrier;
  std::string label;
};

/// Result of checking the Coxeter presentation on the generator matrices.
struct RelationCheck {
  std::size_t i;
  std::size_t j;
  int exponent;  // expected order of r_i r_j
  bool group_ok;
  bool monoid_ok;
};

/// r_i^2 = 1 and (r_i r_j)^m = 1 on matrices; f_i^2 = f_i and the braid-type
/// monoid relations on the Demazure realization.
inline std::vector<RelationCheck> check_presentation(const WeylGroup& w) {
  std::vector<RelationCheck> out;
  const auto n = w.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RelationCheck rc{i, j, coxeter_exponent(w.cartan(), i, j), true, true};
      if (i == j) {
        rc.group_ok = w.reflection(i) * w.reflection(i) == IntMatrix::identity(n);
        rc.monoid_ok = w.rho({i, i}) == w.generator(i);
      } else if (rc.exponent == 0) {
        rc.group_ok = rc.monoid_ok = false;
      } else {
        auto p = IntMatrix::identity(n);
        const auto rr = w.reflection(i) * w.reflection(j);
        bool order_exact = true;
        for (int k = 1; k <= rc.exponent; ++k) {
          p = p * rr;
          if (k < rc.exponent && p == IntMatrix::identity(n)) order_exact = false;
        }
        rc.group_ok = order_exact && p == IntMatrix::identity(n);
        // (f_i f_j ...) with m letters equals (f_j f_i ...) with m letters.
        std::vector<std::size_t> a, b;
        for (int k = 0; k < rc.exponent; ++k) {
          a.push_back(k % 2 == 0 ? i : j);
          b.push_back(k % 2 == 0 ? j : i);
        }
        rc.monoid_ok = w.rho(a) == w.rho(b);
      }
      out.push_back(rc);
    }
  return out;
}

/// psi: W(C) -> W(Q)^G, r_i -> prod_{v in orbit i} s_v.
class FoldingMap {
 public:
  FoldingMap(const WeylGroup& folded, const WeylGroup& unfolded, std::vector<std::vector<std::size_t>> orbits)
      : folded_(&folded), unfolded_(&unfolded), orbits_(std::move(orbits)) {
    if (orbits_.size() != folded.rank()) fail(ErrorKind::InvalidInput, "one orbit per folded generator");
    for (const auto& orbit : orbits_)
      for (auto x : orbit)
        for (auto y : orbit)
          if (x != y && unfolded.cartan()[x][y] != 0)
            fail(ErrorKind::InvalidInput, "orbit members are joined by an arrow; images are not well defined");
    for (std::size_t i = 0; i < orbits_.size(); ++i) generator_images_.push_back(unfolded.evaluate(orbits_[i]));
  }

  const WeylGroup& folded() const noexcept { return *folded_; }
  const WeylGroup& unfolded() const noexcept { return *unfolded_; }
  const std::vector<std::vector<std::size_t>>& orbits() const noexcept { return orbits_; }

  /// The word over W(Q) obtained by expanding each letter into its orbit.
  std::vector<std::size_t> expand(const std::vector<std::size_t>& word) const {
    std::vector<std::size_t> out;
    for (auto i : word) out.insert(out.end(), orbits_.at(i).begin(), orbits_.at(i).end());
    return out;
  }

  std::size_t psi(std::size_t w) const { return unfolded_->evaluate(expand(folded_->reduced_word(w))); }

  /// psi' = rho_Q ∘ psi ∘ rho_C^{-1}; on carriers this is psi itself.
  std::size_t psi_prime(std::size_t m) const { return psi(m); }

  /// The expansion of a reduced word is reduced in W(Q).
  bool check_reduced_image(const std::vector<std::size_t>& word) const {
    if (!folded_->is_reduced(word)) fail(ErrorKind::NotReduced, "input word is not reduced in W(C)");
    const auto e = expand(word);
    return unfolded_->is_reduced(e);
  }

 private:
  const WeylGroup* folded_;
  const WeylGroup* unfolded_;
  std::vector<std::vector<std::size_t>> orbits_;
  std::vector<std::size_t> generator_images_;
};

/// Elements of W(Q) fixed by every vertex permutation (acting by
/// simultaneous row and column permutation of the matrix).
inline std::vector<std::size_t> fixed_subgroup(const WeylGroup& w, const std::vector<std::vector<std::size_t>>& perms) {
  std::vector<std::size_t> out;
  const auto n = w.rank();
  for (std::size_t k = 0; k < w.order(); ++k) {
    const auto& m = w.matrix(k);
    bool fixed = true;
    for (const auto& p : perms) {
      for (std::size_t a = 0; a < n && fixed; ++a)
        for (std::size_t b = 0; b < n && fixed; ++b) fixed = m(p[a], p[b]) == m(a, b);
      if (!fixed) break;
    }
    if (fixed) out.push_back(k);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> vertex_permutations(const GroupAction& action) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : action.elements()) out.push_back(g.vertex_map);
  return out;
}

}  // namespace foldkit
