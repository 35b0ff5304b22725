#pragma once

// Skew group algebras A#G for a finite group acting on a finite-dimensional
// algebra by automorphisms, with (a#g)(b#h) = a g(b) # gh, and the passage
// between G-invariant ideals of A and G-graded ideals of A#G.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/algebra.hpp"
#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/ideal.hpp"
#include "foldkit/linalg.hpp"
#include "foldkit/quiver.hpp"

namespace foldkit {

/// A finite group acting on an algebra. Element 0 is the identity and
/// table[g][h] is the index of gh (apply h first).
template <Field F>
struct AlgebraGroupAction {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> inverse;
  std::vector<AlgebraAutomorphism<F>> automorphisms;

  std::size_t order() const noexcept { return table.size(); }
};

/// Induces the action of a quiver automorphism group on a presented algebra.
/// `lift` maps a quiver automorphism to one of the presentation quiver
/// (e.g. extension to the double quiver).
template <Field F, class Lift>
AlgebraGroupAction<F> induced_group_action(const FiniteDimAlgebra<F>& algebra, const GroupAction& action, Lift lift) {
  AlgebraGroupAction<F> out;
  out.table = action.table();
  for (std::size_t g = 0; g < action.order(); ++g) {
    out.labels.push_back(g == 0 ? "1" : "g" + std::to_string(g));
    out.inverse.push_back(action.inverse(g));
    out.automorphisms.push_back(induced_automorphism(algebra, lift(action.element(g))));
  }
  return out;
}

/// The trivial action of an abstract cyclic group of order m.
template <Field F>
AlgebraGroupAction<F> trivial_cyclic_action(const FiniteDimAlgebra<F>& algebra, std::size_t m) {
  AlgebraGroupAction<F> out;
  AlgebraAutomorphism<F> id;
  for (std::size_t j = 0; j < algebra.dimension(); ++j) id.images.push_back(algebra.basis_vector(j));
  for (std::size_t g = 0; g < m; ++g) {
    out.labels.push_back(g == 0 ? "1" : "g" + std::to_string(g));
    std::vector<std::size_t> row;
    for (std::size_t h = 0; h < m; ++h) row.push_back((g + h) % m);
    out.table.push_back(std::move(row));
    out.inverse.push_back((m - g) % m);
    out.automorphisms.push_back(id);
  }
  return out;
}

template <Field F>
class SkewAlgebra {
 public:
  SkewAlgebra(AlgebraPtr<F> base, AlgebraGroupAction<F> group, AlgebraPtr<F> algebra)
      : base_(std::move(base)), group_(std::move(group)), algebra_(std::move(algebra)) {}

  const AlgebraPtr<F>& base() const noexcept { return base_; }
  const AlgebraGroupAction<F>& group() const noexcept { return group_; }
  const AlgebraPtr<F>& algebra() const noexcept { return algebra_; }

  /// Basis order is A-major, group-minor: b_i # g sits at i * |G| + g.
  std::size_t index(std::size_t base_index, std::size_t g) const { return base_index * group_.order() + g; }

  /// sum_g a_g # g from the components a_g.
  Vector<F> combine(const std::vector<Vector<F>>& parts) const {
    auto v = algebra_->zero();
    for (std::size_t g = 0; g < parts.size(); ++g)
      for (std::size_t i = 0; i < parts[g].size(); ++i) v[index(i, g)] = parts[g][i];
    return v;
  }

  /// a # g
  Vector<F> embed(const Vector<F>& a, std::size_t g = 0) const {
    std::vector<Vector<F>> parts(group_.order(), base_->zero());
    parts[g] = a;
    return combine(parts);
  }

  /// The component a_g of sum_h a_h # h.
  Vector<F> component(const Vector<F>& x, std::size_t g) const {
    auto a = base_->zero();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = x[index(i, g)];
    return a;
  }

  /// (1#g)(a#1)(1#g^{-1}) = g(a)#1 on every basis element a.
  bool check_conjugation() const {
    const auto& field = base_->field();
    for (std::size_t g = 0; g < group_.order(); ++g) {
      const auto left = embed(base_->unit(), g);
      const auto right = embed(base_->unit(), group_.inverse[g]);
      for (std::size_t i = 0; i < base_->dimension(); ++i) {
        const auto a = base_->basis_vector(i);
        const auto lhs = algebra_->multiply(algebra_->multiply(left, embed(a)), right);
        if (lhs != embed(group_.automorphisms[g].apply(field, a))) return false;
      }
    }
    return true;
  }

  /// a -> a#1 is an injective algebra map.
  bool check_embedding() const {
    for (std::size_t i = 0; i < base_->dimension(); ++i)
      for (std::size_t j = 0; j < base_->dimension(); ++j) {
        const auto bi = base_->basis_vector(i), bj = base_->basis_vector(j);
        if (algebra_->multiply(embed(bi), embed(bj)) != embed(base_->multiply(bi, bj))) return false;
      }
    return algebra_->unit() == embed(base_->unit());
  }

 private:
  AlgebraPtr<F> base_;
  AlgebraGroupAction<F> group_;
  AlgebraPtr<F> algebra_;
};

template <Field F>
void validate_group_action(const FiniteDimAlgebra<F>& a, const AlgebraGroupAction<F>& group) {
  const auto& field = a.field();
  const auto m = group.order();
  if (m == 0 || group.automorphisms.size() != m || group.inverse.size() != m)
    fail(ErrorKind::ActionInvalid, "incomplete group data");
  if (!group.automorphisms[0].is_identity(field)) fail(ErrorKind::ActionInvalid, "identity does not act trivially");
  for (std::size_t g = 0; g < m; ++g) {
    if (group.automorphisms[g].images.size() != a.dimension())
      fail(ErrorKind::ActionInvalid, "automorphism matrix has the wrong size");
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t j = 0; j < a.dimension(); ++j) {
        const auto via = group.automorphisms[g].apply(field, group.automorphisms[h].images[j]);
        if (via != group.automorphisms[group.table[g][h]].images[j])
          fail(ErrorKind::ActionInvalid, "automorphisms do not compose like the group");
      }
  }
}

template <Field F>
SkewAlgebra<F> skew_group_algebra(const AlgebraPtr<F>& base, AlgebraGroupAction<F> group) {
  validate_group_action(*base, group);
  const auto& field = base->field();
  const auto n = base->dimension();
  const auto m = group.order();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < m; ++g) labels.push_back(base->label(i) + "#" + group.labels[g]);
  std::vector<std::vector<SparseVector<F>>> table(n * m, std::vector<SparseVector<F>>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < m; ++g) {
      const auto bi = base->basis_vector(i);
      for (std::size_t j = 0; j < n; ++j) {
        // b_i g(b_j), shared by every h
        const auto prod = to_sparse(field, base->multiply(bi, group.automorphisms[g].images[j]));
        for (std::size_t h = 0; h < m; ++h) {
          auto& entry = table[i * m + g][j * m + h];
          const auto gh = group.table[g][h];
          for (const auto& t : prod) entry.push_back({t.index * m + gh, t.coeff});
        }
      }
    }
  auto lift = [&](const Vector<F>& a, std::size_t g) {
    Vector<F> v(n * m, field.zero());
    for (std::size_t i = 0; i < n; ++i) v[i * m + g] = a[i];
    return v;
  };
  std::vector<Vector<F>> idempotents, generators;
  for (const auto& e : base->idempotents()) idempotents.push_back(lift(e, 0));
  for (const auto& x : base->generators()) generators.push_back(lift(x, 0));
  for (std::size_t g = 1; g < m; ++g) generators.push_back(lift(base->unit(), g));
  auto algebra = std::make_shared<const FiniteDimAlgebra<F>>(field, std::move(labels), std::move(table),
                                                             std::move(idempotents), std::move(generators));
  return SkewAlgebra<F>(base, std::move(group), std::move(algebra));
}

/// g(I) = I for every group element.
template <Field F>
bool is_g_invariant(const Ideal<F>& ideal, const AlgebraGroupAction<F>& group) {
  for (const auto& phi : group.automorphisms)
    if (!is_stable(ideal, phi)) return false;
  return true;
}

/// I#G = { sum_g a_g # g : a_g in I } for a G-invariant ideal I.
template <Field F>
Ideal<F> induced_ideal(const Ideal<F>& ideal, const SkewAlgebra<F>& s) {
  if (ideal.parent() != s.base()) fail(ErrorKind::ParentMismatch, "ideal does not live in the base algebra");
  if (!is_g_invariant(ideal, s.group())) fail(ErrorKind::NotInvariant, "ideal is not G-invariant");
  RowSpace<F> space(s.algebra()->field(), s.algebra()->dimension());
  for (const auto& row : ideal.rows())
    for (std::size_t g = 0; g < s.group().order(); ++g) space.insert(s.embed(row, g));
  std::vector<Vector<F>> gens;
  for (const auto& x : ideal.generators()) gens.push_back(s.embed(x));
  Ideal<F> out(s.algebra(), std::move(space), std::move(gens));
  if (!out.is_two_sided()) fail(ErrorKind::NotInvariant, "I#G is not a two-sided ideal");
  return out;
}

/// base = { a : a#1 in J }; J is graded iff J = base#G.
template <Field F>
std::pair<bool, Ideal<F>> graded_part(const Ideal<F>& j, const SkewAlgebra<F>& s) {
  if (j.parent() != s.algebra()) fail(ErrorKind::ParentMismatch, "ideal does not live in the skew algebra");
  const auto n = s.base()->dimension();
  const auto m = s.group().order();
  std::vector<bool> keep(n * m, false);
  for (std::size_t i = 0; i < n; ++i) keep[s.index(i, 0)] = true;
  const auto slice = intersect_coordinate_subspace(j.space(), keep);
  RowSpace<F> base_space(s.base()->field(), n);
  for (const auto& row : slice.rows()) base_space.insert(s.component(row, 0));
  Ideal<F> base(s.base(), std::move(base_space));
  if (!base.is_two_sided() || !is_g_invariant(base, s.group()))
    fail(ErrorKind::InvalidInput, "graded slice is not a G-invariant ideal; input is not an ideal of A#G");
  RowSpace<F> induced(s.algebra()->field(), n * m);
  for (const auto& row : base.rows())
    for (std::size_t g = 0; g < m; ++g) induced.insert(s.embed(row, g));
  return {induced == j.space(), std::move(base)};
}

/// Image of a monoid of G-invariant ideals under I -> I#G. The image monoid
/// reuses the source's words; (I#G)(J#G) = (IJ)#G is checked on every pair
/// and a failure raises InvalidInput.
template <Field F>
IdealMonoid<F> induced_monoid_map(const IdealMonoid<F>& m, const SkewAlgebra<F>& s) {
  IdealMonoid<F> image{s.algebra(), m.generator_labels, {}, {}, {}, m.right_action, m.table, {}};
  for (const auto& g : m.generators) image.generators.push_back(induced_ideal(g, s));
  for (std::size_t k = 0; k < m.size(); ++k) image.add(induced_ideal(m.elements[k], s), m.words[k]);
  for (std::size_t k = 0; k < m.size(); ++k)
    if (image.find(image.elements[k]) != k) fail(ErrorKind::InvalidInput, "I -> I#G is not injective");
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (!(ideal_product(image.elements[a], image.elements[b]) == image.elements[m.table[a][b]]))
        fail(ErrorKind::InvalidInput, "(I#G)(J#G) != (IJ)#G for " + m.word_label(a) + ", " + m.word_label(b));
  return image;
}

}  // namespace foldkit
