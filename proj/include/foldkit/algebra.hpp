#pragma once

// Finite-dimensional algebras given by a basis and structure constants, and
// the normal-form engine turning a presentation into one.

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/groebner.hpp"
#include "foldkit/linalg.hpp"
#include "foldkit/path.hpp"
#include "foldkit/presentation.hpp"
#include "foldkit/quiver.hpp"

namespace foldkit {

template <Field F>
struct SparseTerm {
  std::size_t index;
  typename F::value_type coeff;
};

template <Field F>
using SparseVector = std::vector<SparseTerm<F>>;

/// b_i * b_j = sum_k c^k_ij b_k, stored sparsely per pair (i, j).
template <Field F>
class FiniteDimAlgebra {
 public:
  using Scalar = typename F::value_type;
  using Vec = Vector<F>;

  /// Normal-form data kept when the algebra comes from a presentation.
  struct NormalForm {
    std::shared_ptr<const RewritingSystem<F>> rewriting;
    std::vector<Path> words;
    std::map<Path, std::size_t, PathLess> index;
    Presentation<F> presentation;
  };

  FiniteDimAlgebra(F field, std::vector<std::string> labels, std::vector<std::vector<SparseVector<F>>> table,
                   std::vector<Vec> idempotents, std::vector<Vec> generators)
      : field_(std::move(field)),
        labels_(std::move(labels)),
        table_(std::move(table)),
        idempotents_(std::move(idempotents)),
        generators_(std::move(generators)) {
    const auto n = labels_.size();
    if (table_.size() != n) fail(ErrorKind::DimensionMismatch, "structure table size");
    for (const auto& row : table_)
      if (row.size() != n) fail(ErrorKind::DimensionMismatch, "structure table row size");
    unit_ = zero();
    for (const auto& e : idempotents_) axpy(field_, unit_, field_.one(), e);
  }

  const F& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const SparseVector<F>& basis_product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<Vec>& idempotents() const noexcept { return idempotents_; }
  /// Elements generating the algebra (idempotents and arrows for path algebra quotients).
  const std::vector<Vec>& generators() const noexcept { return generators_; }
  const Vec& unit() const noexcept { return unit_; }
  const NormalForm* normal_form() const noexcept { return normal_form_.get(); }

  Vec zero() const { return Vec(dimension(), field_.zero()); }
  Vec basis_vector(std::size_t i) const {
    auto v = zero();
    v.at(i) = field_.one();
    return v;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    check(x);
    check(y);
    auto r = zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (field_.is_zero(y[j])) continue;
        const auto c = field_.mul(x[i], y[j]);
        for (const auto& t : table_[i][j]) r[t.index] = field_.add(r[t.index], field_.mul(c, t.coeff));
      }
    }
    return r;
  }

  /// x * b_j
  Vec multiply_basis_right(const Vec& x, std::size_t j) const {
    auto r = zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (field_.is_zero(x[i])) continue;
      for (const auto& t : table_[i][j]) r[t.index] = field_.add(r[t.index], field_.mul(x[i], t.coeff));
    }
    return r;
  }

  /// Quotient map from the path algebra; requires a presentation-built algebra.
  Vec reduce(const PathElement<F>& e) const {
    if (!normal_form_) fail(ErrorKind::InvalidInput, "algebra carries no presentation");
    if (!(e.field() == field_)) fail(ErrorKind::FieldMismatch, e.field().descriptor() + " vs " + field_.descriptor());
    auto nf = normal_form_->rewriting->reduce(e);
    auto v = zero();
    for (const auto& [p, c] : nf.terms()) v[normal_form_->index.at(p)] = c;
    return v;
  }

  Vec reduce_path(const Path& p) const { return reduce(PathElement<F>::of(field_, p, field_.one())); }

  bool check_associativity(std::size_t exhaustive_limit = 200, std::size_t samples = 20000,
                           unsigned seed = 1) const {
    const auto n = dimension();
    auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
      const auto bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
      return multiply(multiply(bi, bj), bk) == multiply(bi, multiply(bj, bk));
    };
    if (n <= exhaustive_limit) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (!triple_ok(i, j, k)) return false;
      return true;
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s)
      if (!triple_ok(pick(rng), pick(rng), pick(rng))) return false;
    return true;
  }

  /// Unit law, and e_i e_j = delta_ij e_i.
  bool check_unit_and_idempotents() const {
    for (std::size_t i = 0; i < dimension(); ++i) {
      const auto b = basis_vector(i);
      if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
    }
    for (std::size_t i = 0; i < idempotents_.size(); ++i)
      for (std::size_t j = 0; j < idempotents_.size(); ++j) {
        const auto p = multiply(idempotents_[i], idempotents_[j]);
        if (p != (i == j ? idempotents_[i] : zero())) return false;
      }
    return true;
  }

  /// Every relation of the source presentation maps to zero.
  bool check_relations() const {
    if (!normal_form_) return true;
    for (const auto& r : normal_form_->presentation.relations)
      if (!is_zero_vector(field_, std::span<const Scalar>(reduce(r)))) return false;
    return true;
  }

  void attach_normal_form(std::unique_ptr<NormalForm> nf) { normal_form_ = std::move(nf); }

 private:
  void check(const Vec& x) const {
    if (x.size() != dimension())
      fail(ErrorKind::DimensionMismatch, "element of length " + std::to_string(x.size()) + " in algebra of dimension " +
                                              std::to_string(dimension()));
  }

  F field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVector<F>>> table_;
  std::vector<Vec> idempotents_;
  std::vector<Vec> generators_;
  Vec unit_;
  std::shared_ptr<const NormalForm> normal_form_;
};

template <Field F>
using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra<F>>;

template <Field F>
SparseVector<F> to_sparse(const F& field, const Vector<F>& v) {
  SparseVector<F> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) s.push_back({i, v[i]});
  return s;
}

/// Completes the relations, enumerates the normal words and tabulates their
/// products. Fails with DegreeCapExceeded / DimensionCapExceeded when the
/// quotient cannot be certified finite-dimensional within the caps.
template <Field F>
AlgebraPtr<F> normal_form_engine(const Presentation<F>& presentation, EngineCaps caps = {}) {
  if (caps.dim_cap == 0) fail(ErrorKind::InvalidInput, "dimension cap must be positive");
  auto rewriting = std::make_shared<const RewritingSystem<F>>(presentation, caps.degree_cap);
  const auto& q = presentation.quiver;
  const auto& field = presentation.field;
  auto nf = std::make_unique<typename FiniteDimAlgebra<F>::NormalForm>(
      typename FiniteDimAlgebra<F>::NormalForm{rewriting, rewriting->normal_words(caps.dim_cap), {}, presentation});
  const auto n = nf->words.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    nf->index.emplace(nf->words[i], i);
    labels.push_back(nf->words[i].to_string(q));
  }
  auto to_vec = [&](const PathElement<F>& e) {
    Vector<F> v(n, field.zero());
    const auto r = rewriting->reduce(e);
    for (const auto& [p, c] : r.terms()) v[nf->index.at(p)] = c;
    return v;
  };
  std::vector<std::vector<SparseVector<F>>> table(n, std::vector<SparseVector<F>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto p = concatenate(nf->words[i], nf->words[j]))
        table[i][j] = to_sparse(field, to_vec(PathElement<F>::of(field, *p, field.one())));
  std::vector<Vector<F>> idempotents, generators;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto e = to_vec(PathElement<F>::of(field, Path::trivial(v), field.one()));
    idempotents.push_back(e);
    if (!is_zero_vector(field, std::span<const typename F::value_type>(e))) generators.push_back(e);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto x = to_vec(PathElement<F>::of(field, Path::of_arrow(q, a), field.one()));
    if (!is_zero_vector(field, std::span<const typename F::value_type>(x))) generators.push_back(std::move(x));
  }
  auto algebra = std::make_shared<FiniteDimAlgebra<F>>(field, std::move(labels), std::move(table),
                                                       std::move(idempotents), std::move(generators));
  algebra->attach_normal_form(std::move(nf));
  return algebra;
}

/// A linear automorphism of an algebra given by its matrix on the basis:
/// column j is the image of b_j.
template <Field F>
struct AlgebraAutomorphism {
  std::vector<Vector<F>> images;

  Vector<F> apply(const F& field, const Vector<F>& x) const {
    Vector<F> r(x.size(), field.zero());
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!field.is_zero(x[j])) axpy(field, r, x[j], images[j]);
    return r;
  }

  bool is_identity(const F& field) const {
    for (std::size_t j = 0; j < images.size(); ++j)
      for (std::size_t i = 0; i < images[j].size(); ++i)
        if (images[j][i] != (i == j ? field.one() : field.zero())) return false;
    return true;
  }
};

/// Applies a quiver automorphism of the presentation quiver arrow-wise and
/// reduces. Checks that relations go to zero and that the map is
/// multiplicative (all basis pairs up to dimension 200, sampled beyond).
template <Field F>
AlgebraAutomorphism<F> induced_automorphism(const FiniteDimAlgebra<F>& algebra, const QuiverAutomorphism& g) {
  const auto* nf = algebra.normal_form();
  if (!nf) fail(ErrorKind::InvalidInput, "algebra carries no presentation");
  const auto& q = nf->presentation.quiver;
  validate_automorphism(q, g);
  const auto& field = algebra.field();
  auto map_path = [&](const Path& p) {
    Path r = p;
    r.source = g.vertex_map[p.source];
    r.target = g.vertex_map[p.target];
    for (auto& a : r.arrows) a = g.arrow_map[a];
    return r;
  };
  auto map_element = [&](const PathElement<F>& e) {
    PathElement<F> r(field);
    for (const auto& [p, c] : e.terms()) r.add_term(map_path(p), c);
    return r;
  };
  for (const auto& rel : nf->presentation.relations)
    if (!is_zero_vector(field, std::span<const typename F::value_type>(algebra.reduce(map_element(rel)))))
      fail(ErrorKind::RelationNotPreserved, "image of relation " + rel.to_string(q) + " is nonzero");
  AlgebraAutomorphism<F> phi;
  for (const auto& w : nf->words) phi.images.push_back(algebra.reduce_path(map_path(w)));
  const auto n = algebra.dimension();
  auto pair_ok = [&](std::size_t i, std::size_t j) {
    const auto lhs = phi.apply(field, algebra.multiply(algebra.basis_vector(i), algebra.basis_vector(j)));
    return lhs == algebra.multiply(phi.images[i], phi.images[j]);
  };
  if (n <= 200) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!pair_ok(i, j)) fail(ErrorKind::RelationNotPreserved, "induced map is not multiplicative");
  } else {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < 20000; ++s)
      if (!pair_ok(pick(rng), pick(rng))) fail(ErrorKind::RelationNotPreserved, "induced map is not multiplicative");
  }
  return phi;
}

}  // namespace foldkit
