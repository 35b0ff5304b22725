#pragma once

// Paths and K-linear combinations of paths in a path algebra.
//
// Paths are written right to left, as in function composition: the word
// [a0, a1, ..., ak] denotes a0 a1 ... ak, where ak is traversed first. So the
// target of the path is t(a0), the source is s(ak), and the product p * q is
// nonzero iff s(p) == t(q).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/quiver.hpp"

namespace foldkit {

struct Path {
  std::vector<std::size_t> arrows;  // written order
  std::size_t source = 0;
  std::size_t target = 0;

  static Path trivial(std::size_t v) { return Path{{}, v, v}; }

  static Path of_arrow(const Quiver& q, std::size_t a) {
    return Path{{a}, q.arrow(a).source, q.arrow(a).target};
  }

  /// Builds a path from a written word, validating composability.
  static Path of_word(const Quiver& q, const std::vector<std::size_t>& word) {
    if (word.empty()) fail(ErrorKind::InvalidInput, "empty word needs a vertex");
    for (std::size_t k = 0; k + 1 < word.size(); ++k)
      if (q.arrow(word[k]).source != q.arrow(word[k + 1]).target)
        fail(ErrorKind::InvalidInput,
             "arrows '" + q.arrow(word[k + 1]).id + "' then '" + q.arrow(word[k]).id + "' do not compose");
    return Path{word, q.arrow(word.back()).source, q.arrow(word.front()).target};
  }

  std::size_t degree() const noexcept { return arrows.size(); }
  bool is_trivial() const noexcept { return arrows.empty(); }

  /// Vertex at cut position k (0 = target end, degree() = source end).
  std::size_t vertex_at(const Quiver& q, std::size_t k) const {
    if (arrows.empty()) return source;
    if (k == 0) return target;
    return q.arrow(arrows[k - 1]).source;
  }

  /// Subpath of `count` arrows starting at written position `from`.
  Path slice(const Quiver& q, std::size_t from, std::size_t count) const {
    if (count == 0) return trivial(vertex_at(q, from));
    std::vector<std::size_t> w(arrows.begin() + from, arrows.begin() + from + count);
    return Path{std::move(w), q.arrow(arrows[from + count - 1]).source, q.arrow(arrows[from]).target};
  }

  std::string to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertex_id(source);
    std::string s;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (k) s += " ";
      s += q.arrow(arrows[k]).id;
    }
    return s;
  }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Degree first, then lexicographic on arrow indices; trivial paths by vertex.
inline std::strong_ordering compare_paths(const Path& a, const Path& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.is_trivial()) return a.source <=> b.source;
  return std::lexicographical_compare_three_way(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                                                b.arrows.end());
}

struct PathLess {
  bool operator()(const Path& a, const Path& b) const { return compare_paths(a, b) < 0; }
};

inline std::optional<Path> concatenate(const Path& p, const Path& q) {
  if (p.source != q.target) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  Path r{p.arrows, q.source, p.target};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

/// Finds the first occurrence of `word` as a subpath of `p` starting at or
/// after written position `from`. A trivial `word` matches at vertex positions.
inline std::optional<std::size_t> find_subpath(const Quiver& q, const Path& p, const Path& word,
                                               std::size_t from = 0) {
  if (word.is_trivial()) {
    for (std::size_t k = from; k <= p.degree(); ++k)
      if (p.vertex_at(q, k) == word.source) return k;
    return std::nullopt;
  }
  if (word.degree() > p.degree()) return std::nullopt;
  auto it = std::search(p.arrows.begin() + static_cast<std::ptrdiff_t>(std::min(from, p.degree())), p.arrows.end(),
                        word.arrows.begin(), word.arrows.end());
  if (it == p.arrows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.arrows.begin());
}

/// A K-linear combination of paths with nonzero coefficients, sorted by the
/// path order. The leading term is the largest path.
template <Field F>
class PathElement {
 public:
  using Scalar = typename F::value_type;
  using Terms = std::map<Path, Scalar, PathLess>;

  explicit PathElement(F field) : field_(std::move(field)) {}

  static PathElement of(F field, const Path& p, Scalar c) {
    PathElement e(std::move(field));
    e.add_term(p, c);
    return e;
  }

  const F& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Path& leading_path() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Path& p, const Scalar& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const PathElement& other, const Scalar& c) {
    for (const auto& [p, x] : other.terms_) add_term(p, field_.mul(c, x));
  }

  void scale(const Scalar& c) {
    if (field_.is_zero(c)) {
      terms_.clear();
      return;
    }
    for (auto& [p, x] : terms_) x = field_.mul(x, c);
  }

  /// left * (*this) * right, dropping non-composable terms.
  PathElement sandwich(const Path& left, const Path& right) const {
    PathElement r(field_);
    for (const auto& [p, c] : terms_) {
      auto lp = concatenate(left, p);
      if (!lp) continue;
      auto lpr = concatenate(*lp, right);
      if (lpr) r.add_term(*lpr, c);
    }
    return r;
  }

  PathElement operator*(const PathElement& other) const {
    PathElement r(field_);
    for (const auto& [p, c] : terms_)
      for (const auto& [q, d] : other.terms_)
        if (auto pq = concatenate(p, q)) r.add_term(*pq, field_.mul(c, d));
    return r;
  }

  /// True if every term has the same source and target.
  bool is_uniform() const {
    if (terms_.empty()) return true;
    const auto& first = terms_.begin()->first;
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
      return t.first.source == first.source && t.first.target == first.target;
    });
  }

  std::string to_string(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      if (it->second != field_.one()) s += field_.to_string(it->second) + "*";
      s += it->first.to_string(q);
    }
    return s;
  }

  friend bool operator==(const PathElement& a, const PathElement& b) { return a.terms_ == b.terms_; }

 private:
  F field_;
  Terms terms_;
};

}  // namespace foldkit
