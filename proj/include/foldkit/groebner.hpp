#pragma once

// Noncommutative Groebner bases for two-sided ideals of path algebras
// generated by uniform elements, under the degree-lexicographic path order.
//
// Completion is Buchberger-style: each new basis element is overlapped with
// every current one (suffix of one leading word == prefix of the other), the
// overlap differences are reduced, and nonzero remainders are added back.
// Basis elements whose leading word is divisible by a newer one are pulled
// out and re-reduced, so the final basis is reduced.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/path.hpp"
#include "foldkit/presentation.hpp"

namespace foldkit {

struct EngineCaps {
  std::size_t degree_cap = 40;
  std::size_t dim_cap = 5000;
};

template <Field F>
class RewritingSystem {
 public:
  RewritingSystem(const Presentation<F>& presentation, std::size_t degree_cap)
      : quiver_(presentation.quiver), field_(presentation.field), degree_cap_(degree_cap) {
    if (degree_cap == 0) fail(ErrorKind::InvalidInput, "degree cap must be positive");
    for (const auto& r : presentation.relations) {
      if (r.is_zero()) fail(ErrorKind::InvalidInput, "zero relation in presentation");
      for (auto& part : uniform_components(r)) enqueue(std::move(part));
    }
    complete();
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const F& field() const noexcept { return field_; }
  const std::vector<PathElement<F>>& basis() const noexcept { return basis_; }

  /// Full reduction to the unique normal form.
  PathElement<F> reduce(PathElement<F> f) const {
    PathElement<F> remainder(field_);
    while (!f.is_zero()) {
      const Path lead = f.leading_path();
      const auto coeff = f.leading_coeff();
      bool reduced = false;
      for (const auto& g : basis_) {
        auto pos = find_subpath(quiver_, lead, g.leading_path());
        if (!pos) continue;
        const auto len = g.leading_path().degree();
        const auto left = lead.slice(quiver_, 0, *pos);
        const auto right = lead.slice(quiver_, *pos + len, lead.degree() - *pos - len);
        f.add(g.sandwich(left, right), field_.neg(coeff));
        reduced = true;
        break;
      }
      if (!reduced) {
        remainder.add_term(lead, coeff);
        f.add_term(lead, field_.neg(coeff));
      }
    }
    return remainder;
  }

  bool is_normal(const Path& p) const {
    for (const auto& g : basis_)
      if (find_subpath(quiver_, p, g.leading_path())) return false;
    return true;
  }

  /// All irreducible paths, by degree then lexicographically. Grows the
  /// words one arrow at a time; the language is finite iff the growth stops.
  std::vector<Path> normal_words(std::size_t dim_cap) const {
    std::vector<Path> words;
    std::vector<Path> frontier;
    for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) {
      auto e = Path::trivial(v);
      if (is_normal(e)) frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (const auto& w : frontier) {
        words.push_back(w);
        if (words.size() > dim_cap)
          fail(ErrorKind::DimensionCapExceeded,
               "more than " + std::to_string(dim_cap) + " normal words; quotient may be infinite-dimensional");
        for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
          auto longer = concatenate(w, Path::of_arrow(quiver_, a));
          if (longer && is_normal(*longer)) next.push_back(std::move(*longer));
        }
      }
      std::sort(next.begin(), next.end(), PathLess{});
      frontier = std::move(next);
    }
    return words;
  }

  /// Recomputes every overlap of the final basis and checks it reduces to zero.
  bool is_confluent() const {
    for (std::size_t a = 0; a < basis_.size(); ++a)
      for (std::size_t b = 0; b < basis_.size(); ++b)
        for (auto& s : overlaps(basis_[a], basis_[b], false))
          if (!reduce(std::move(s)).is_zero()) return false;
    return true;
  }

 private:
  std::vector<PathElement<F>> uniform_components(const PathElement<F>& r) const {
    std::map<std::pair<std::size_t, std::size_t>, PathElement<F>> parts;
    for (const auto& [p, c] : r.terms())
      parts.try_emplace({p.source, p.target}, field_).first->second.add_term(p, c);
    std::vector<PathElement<F>> out;
    for (auto& [key, part] : parts) out.push_back(std::move(part));
    return out;
  }

  void enqueue(PathElement<F> f) {
    if (f.is_zero()) return;
    pending_.emplace(f.leading_path().degree(), std::move(f));
  }

  void make_monic(PathElement<F>& f) const { f.scale(field_.inv(f.leading_coeff())); }

  /// S-elements for leading words u = A B of `a` and v = B C of `b` with B
  /// a nonempty proper overlap: a C - A b.
  std::vector<PathElement<F>> overlaps(const PathElement<F>& a, const PathElement<F>& b, bool enforce_cap) const {
    std::vector<PathElement<F>> out;
    const auto& u = a.leading_path();
    const auto& v = b.leading_path();
    if (u.is_trivial() || v.is_trivial()) return out;
    const auto max_k = std::min(u.degree(), v.degree());
    for (std::size_t k = 1; k < max_k; ++k) {
      if (!std::equal(u.arrows.end() - static_cast<std::ptrdiff_t>(k), u.arrows.end(), v.arrows.begin())) continue;
      const auto total = u.degree() + v.degree() - k;
      if (enforce_cap && total > degree_cap_)
        fail(ErrorKind::DegreeCapExceeded,
             "overlap of degree " + std::to_string(total) + " exceeds cap " + std::to_string(degree_cap_));
      const auto a_prefix = u.slice(quiver_, 0, u.degree() - k);
      const auto c_suffix = v.slice(quiver_, k, v.degree() - k);
      auto s = a.sandwich(Path::trivial(u.target), c_suffix);
      s.add(b.sandwich(a_prefix, Path::trivial(v.source)), field_.neg(field_.one()));
      out.push_back(std::move(s));
    }
    return out;
  }

  void complete() {
    while (!pending_.empty()) {
      auto node = pending_.extract(pending_.begin());
      auto f = reduce(std::move(node.mapped()));
      if (f.is_zero()) continue;
      make_monic(f);
      if (f.leading_path().degree() > degree_cap_)
        fail(ErrorKind::DegreeCapExceeded, "basis element above degree cap");
      // Pull out elements whose leading word the new element divides.
      std::vector<PathElement<F>> kept;
      for (auto& g : basis_) {
        if (find_subpath(quiver_, g.leading_path(), f.leading_path()))
          enqueue(std::move(g));
        else
          kept.push_back(std::move(g));
      }
      basis_ = std::move(kept);
      basis_.push_back(std::move(f));
      const auto& fresh = basis_.back();
      for (const auto& g : basis_) {
        for (auto& s : overlaps(fresh, g, true)) enqueue(std::move(s));
        if (&g != &fresh)
          for (auto& s : overlaps(g, fresh, true)) enqueue(std::move(s));
      }
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_[i] = reduce_tail(basis_[i]);
    std::sort(basis_.begin(), basis_.end(),
              [](const auto& x, const auto& y) { return PathLess{}(x.leading_path(), y.leading_path()); });
  }

  /// Reduces the non-leading part of basis_[i] against the rest of the basis.
  PathElement<F> reduce_tail(const PathElement<F>& g) const {
    PathElement<F> tail = g;
    const Path lead = g.leading_path();
    const auto c = g.leading_coeff();
    tail.add_term(lead, field_.neg(c));
    auto r = reduce_excluding(std::move(tail), lead);
    r.add_term(lead, c);
    return r;
  }

  PathElement<F> reduce_excluding(PathElement<F> f, const Path& own_lead) const {
    PathElement<F> remainder(field_);
    while (!f.is_zero()) {
      const Path lead = f.leading_path();
      const auto coeff = f.leading_coeff();
      bool reduced = false;
      for (const auto& g : basis_) {
        if (g.leading_path() == own_lead) continue;
        auto pos = find_subpath(quiver_, lead, g.leading_path());
        if (!pos) continue;
        const auto len = g.leading_path().degree();
        f.add(g.sandwich(lead.slice(quiver_, 0, *pos), lead.slice(quiver_, *pos + len, lead.degree() - *pos - len)),
              field_.neg(coeff));
        reduced = true;
        break;
      }
      if (!reduced) {
        remainder.add_term(lead, coeff);
        f.add_term(lead, field_.neg(coeff));
      }
    }
    return remainder;
  }

  Quiver quiver_;
  F field_;
  std::size_t degree_cap_;
  std::vector<PathElement<F>> basis_;
  std::multimap<std::size_t, PathElement<F>> pending_;
};

}  // namespace foldkit
