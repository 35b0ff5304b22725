#pragma once

// Two-sided ideals of finite-dimensional algebras, stored as canonical row
// spaces over the algebra's basis, and monoids of ideals under the ideal
// product.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "foldkit/algebra.hpp"
#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/linalg.hpp"

namespace foldkit {

template <Field F>
class Ideal {
 public:
  using Vec = Vector<F>;

  /// `generators`, when given, generate the ideal as a two-sided ideal; they
  /// only speed up products and are not part of the identity of the ideal.
  Ideal(AlgebraPtr<F> parent, RowSpace<F> space, std::vector<Vec> generators = {})
      : parent_(std::move(parent)), space_(std::move(space)), generators_(std::move(generators)) {
    if (space_.ambient() != parent_->dimension())
      fail(ErrorKind::DimensionMismatch, "ideal ambient dimension differs from the algebra");
    if (!(space_.field() == parent_->field())) fail(ErrorKind::FieldMismatch, "ideal field differs from the algebra");
  }

  /// Wraps a subspace after checking it is closed under left and right multiplication.
  static Ideal checked(AlgebraPtr<F> parent, RowSpace<F> space) {
    Ideal ideal(std::move(parent), std::move(space));
    if (!ideal.is_two_sided()) fail(ErrorKind::InvalidInput, "subspace is not a two-sided ideal");
    return ideal;
  }

  const AlgebraPtr<F>& parent() const noexcept { return parent_; }
  const FiniteDimAlgebra<F>& algebra() const noexcept { return *parent_; }
  const RowSpace<F>& space() const noexcept { return space_; }
  const std::vector<Vec>& rows() const noexcept { return space_.rows(); }
  std::size_t dimension() const noexcept { return space_.rank(); }
  std::size_t codimension() const noexcept { return parent_->dimension() - space_.rank(); }
  bool is_zero() const noexcept { return space_.is_zero(); }
  bool is_unit() const noexcept { return space_.is_full(); }
  bool contains(const Vec& v) const { return space_.contains(v); }
  const std::vector<Vec>& generators() const noexcept { return generators_.empty() ? space_.rows() : generators_; }
  std::size_t hash() const { return space_.hash(); }

  bool is_two_sided() const {
    for (const auto& row : space_.rows())
      for (const auto& g : parent_->generators())
        if (!space_.contains(parent_->multiply(g, row)) || !space_.contains(parent_->multiply(row, g))) return false;
    return true;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.space_ == b.space_; }

 private:
  AlgebraPtr<F> parent_;
  RowSpace<F> space_;
  std::vector<Vec> generators_;
};

namespace detail {

/// Smallest subspace containing `seeds` and closed under multiplication by
/// the algebra generators on the requested sides.
template <Field F>
RowSpace<F> closure(const FiniteDimAlgebra<F>& a, const std::vector<Vector<F>>& seeds, bool left, bool right) {
  RowSpace<F> space(a.field(), a.dimension());
  std::deque<Vector<F>> queue;
  auto offer = [&](Vector<F> v) {
    if (space.insert(v)) queue.push_back(std::move(v));
  };
  for (const auto& s : seeds) offer(s);
  while (!queue.empty() && !space.is_full()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : a.generators()) {
      if (left) offer(a.multiply(g, v));
      if (right) offer(a.multiply(v, g));
    }
  }
  return space;
}

}  // namespace detail

/// A (1 - e) A and friends: the two-sided ideal generated by `gens`.
template <Field F>
Ideal<F> ideal_generated(const AlgebraPtr<F>& a, const std::vector<Vector<F>>& gens) {
  return Ideal<F>(a, detail::closure(*a, gens, true, true), gens);
}

template <Field F>
Ideal<F> unit_ideal(const AlgebraPtr<F>& a) {
  return ideal_generated(a, {a->unit()});
}

template <Field F>
Ideal<F> zero_ideal(const AlgebraPtr<F>& a) {
  return Ideal<F>(a, RowSpace<F>(a->field(), a->dimension()));
}

/// I J. With J = A S A this is the right ideal generated by I S (and
/// symmetrically on the left), which is how it is computed.
template <Field F>
Ideal<F> ideal_product(const Ideal<F>& i, const Ideal<F>& j) {
  if (i.parent() != j.parent()) fail(ErrorKind::ParentMismatch, "ideals live in different algebras");
  const auto& a = i.algebra();
  std::vector<Vector<F>> seeds;
  const bool use_right = j.generators().size() <= i.generators().size();
  if (use_right) {
    for (const auto& x : i.rows())
      for (const auto& s : j.generators()) seeds.push_back(a.multiply(x, s));
  } else {
    for (const auto& s : i.generators())
      for (const auto& y : j.rows()) seeds.push_back(a.multiply(s, y));
  }
  return Ideal<F>(i.parent(), detail::closure(a, seeds, !use_right, use_right));
}

/// Monoid of ideals generated by labelled ideals. Element 0 is the unit
/// ideal; words[k] is a generator word whose product is elements[k].
template <Field F>
struct IdealMonoid {
  AlgebraPtr<F> algebra;
  std::vector<std::string> generator_labels;
  std::vector<Ideal<F>> generators;
  std::vector<Ideal<F>> elements;
  std::vector<std::vector<std::size_t>> words;
  /// right_action[k][g] = index of elements[k] * generators[g]
  std::vector<std::vector<std::size_t>> right_action;
  std::vector<std::vector<std::size_t>> table;

  std::size_t size() const noexcept { return elements.size(); }

  std::optional<std::size_t> find(const Ideal<F>& ideal) const {
    auto it = buckets.find(ideal.hash());
    if (it == buckets.end()) return std::nullopt;
    for (auto k : it->second)
      if (elements[k] == ideal) return k;
    return std::nullopt;
  }

  std::size_t add(Ideal<F> ideal, std::vector<std::size_t> word) {
    buckets[ideal.hash()].push_back(elements.size());
    elements.push_back(std::move(ideal));
    words.push_back(std::move(word));
    return elements.size() - 1;
  }

  std::string word_label(std::size_t k) const {
    if (words[k].empty()) return "1";
    std::string s;
    for (auto g : words[k]) s += (s.empty() ? "" : "*") + generator_labels[g];
    return s;
  }

  /// The product of two elements computed directly (not via the table).
  Ideal<F> direct_product(std::size_t a, std::size_t b) const { return ideal_product(elements[a], elements[b]); }

  std::optional<std::size_t> zero_element() const {
    for (std::size_t k = 0; k < elements.size(); ++k)
      if (elements[k].is_zero()) return k;
    return std::nullopt;
  }

  bool table_is_associative() const {
    const auto n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
};

namespace detail {

/// Fills table[a][b] by walking b's generator word through right_action.
template <Field F>
void fill_table(IdealMonoid<F>& m) {
  const auto n = m.size();
  m.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x = a;
      for (auto g : m.words[b]) x = m.right_action[x][g];
      m.table[a][b] = x;
    }
}

}  // namespace detail

/// Breadth-first closure from the unit ideal under right multiplication by
/// the generators. The full table follows from associativity of the ideal
/// product: x * (g1 ... gk) = (...(x g1)...) gk.
template <Field F>
IdealMonoid<F> monoid_closure(const AlgebraPtr<F>& a, std::vector<std::string> labels, std::vector<Ideal<F>> gens,
                              std::size_t element_cap = 100000) {
  if (labels.size() != gens.size()) fail(ErrorKind::InvalidInput, "one label per generator");
  for (const auto& g : gens)
    if (g.parent() != a) fail(ErrorKind::ParentMismatch, "generator ideal lives in another algebra");
  IdealMonoid<F> m{a, std::move(labels), std::move(gens), {}, {}, {}, {}, {}};
  m.add(unit_ideal(a), {});
  for (std::size_t k = 0; k < m.size(); ++k) {
    std::vector<std::size_t> row;
    for (std::size_t g = 0; g < m.generators.size(); ++g) {
      auto product = ideal_product(m.elements[k], m.generators[g]);
      auto found = m.find(product);
      if (!found) {
        if (m.size() >= element_cap)
          fail(ErrorKind::CapExceeded, "ideal monoid exceeds " + std::to_string(element_cap) + " elements");
        auto word = m.words[k];
        word.push_back(g);
        found = m.add(std::move(product), std::move(word));
      }
      row.push_back(*found);
    }
    m.right_action.push_back(std::move(row));
  }
  detail::fill_table(m);
  return m;
}

/// Left-to-right product of labelled generators; the empty word gives the unit ideal.
template <Field F>
Ideal<F> theta_prime(const std::vector<std::string>& labels, const std::vector<Ideal<F>>& gens,
                     const std::vector<std::string>& word) {
  if (labels.size() != gens.size() || gens.empty())
    fail(ErrorKind::InvalidInput, "theta_prime needs a nonempty labelled generator list");
  Ideal<F> acc = unit_ideal(gens.front().parent());
  for (const auto& w : word) {
    auto it = std::find(labels.begin(), labels.end(), w);
    if (it == labels.end()) fail(ErrorKind::UnknownLabel, "no generator labelled '" + w + "'");
    acc = ideal_product(acc, gens[static_cast<std::size_t>(it - labels.begin())]);
  }
  return acc;
}

/// Index-word variant of theta_prime.
template <Field F>
Ideal<F> theta_prime(const std::vector<Ideal<F>>& gens, const std::vector<std::size_t>& word, const AlgebraPtr<F>& a) {
  Ideal<F> acc = unit_ideal(a);
  for (auto w : word) {
    if (w >= gens.size()) fail(ErrorKind::UnknownLabel, "generator index " + std::to_string(w));
    acc = ideal_product(acc, gens[w]);
  }
  return acc;
}

/// I_i = A (1 - e_i) A for every vertex idempotent.
template <Field F>
std::vector<Ideal<F>> vertex_ideals(const AlgebraPtr<F>& a) {
  std::vector<Ideal<F>> out;
  for (const auto& e : a->idempotents()) {
    auto g = a->unit();
    axpy(a->field(), g, a->field().neg(a->field().one()), e);
    out.push_back(ideal_generated(a, {g}));
  }
  return out;
}

/// Product of the vertex ideals over one orbit. The factors must commute.
template <Field F>
Ideal<F> orbit_ideal(const std::vector<Ideal<F>>& vertex_ideals, const std::vector<std::size_t>& orbit) {
  if (orbit.empty()) fail(ErrorKind::InvalidInput, "empty orbit");
  for (std::size_t x = 0; x < orbit.size(); ++x)
    for (std::size_t y = x + 1; y < orbit.size(); ++y)
      if (!(ideal_product(vertex_ideals[orbit[x]], vertex_ideals[orbit[y]]) ==
            ideal_product(vertex_ideals[orbit[y]], vertex_ideals[orbit[x]])))
        fail(ErrorKind::NonCommutingFactors, "vertex ideals of one orbit do not commute");
  Ideal<F> acc = vertex_ideals[orbit.front()];
  for (std::size_t x = 1; x < orbit.size(); ++x) acc = ideal_product(acc, vertex_ideals[orbit[x]]);
  return acc;
}

/// phi(I) ⊆ I; for a bijective linear phi this means phi(I) = I.
template <Field F>
bool is_stable(const Ideal<F>& ideal, const AlgebraAutomorphism<F>& phi) {
  const auto& field = ideal.algebra().field();
  for (const auto& row : ideal.rows())
    if (!ideal.contains(phi.apply(field, row))) return false;
  return true;
}

/// Elements of `m` fixed by every automorphism. The result's generators are
/// its irreducible elements (not a product of two other non-unit elements),
/// labelled by their words in `m`.
template <Field F>
IdealMonoid<F> invariant_submonoid(const IdealMonoid<F>& m, const std::vector<AlgebraAutomorphism<F>>& automorphisms) {
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < m.size(); ++k) {
    bool fixed = std::all_of(automorphisms.begin(), automorphisms.end(),
                             [&](const auto& phi) { return is_stable(m.elements[k], phi); });
    if (fixed) kept.push_back(k);
  }
  std::vector<std::size_t> position(m.size(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < kept.size(); ++x) position[kept[x]] = x;
  std::vector<std::size_t> irreducible;
  for (std::size_t x = 1; x < kept.size(); ++x) {
    bool reducible = false;
    for (std::size_t a = 1; a < kept.size() && !reducible; ++a)
      for (std::size_t b = 1; b < kept.size() && !reducible; ++b)
        reducible = a != x && b != x && m.table[kept[a]][kept[b]] == kept[x];
    if (!reducible) irreducible.push_back(kept[x]);
  }
  IdealMonoid<F> sub{m.algebra, {}, {}, {}, {}, {}, {}, {}};
  for (auto k : irreducible) {
    sub.generator_labels.push_back(m.word_label(k));
    sub.generators.push_back(m.elements[k]);
  }
  // Breadth-first from the unit so words are over the new generators.
  sub.add(m.elements[0], {});
  std::vector<std::size_t> origin{0};
  for (std::size_t x = 0; x < sub.size(); ++x) {
    std::vector<std::size_t> row;
    for (std::size_t g = 0; g < irreducible.size(); ++g) {
      const auto target = m.table[origin[x]][irreducible[g]];
      if (position[target] == static_cast<std::size_t>(-1))
        fail(ErrorKind::NotInvariant, "product of invariant ideals is not invariant");
      auto found = sub.find(m.elements[target]);
      if (!found) {
        auto word = sub.words[x];
        word.push_back(g);
        found = sub.add(m.elements[target], std::move(word));
        origin.push_back(target);
      }
      row.push_back(*found);
    }
    sub.right_action.push_back(std::move(row));
  }
  if (sub.size() != kept.size())
    fail(ErrorKind::InvalidInput, "invariant elements are not generated by the irreducible ones");
  detail::fill_table(sub);
  return sub;
}

}  // namespace foldkit
