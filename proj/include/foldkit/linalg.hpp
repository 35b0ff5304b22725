#pragma once

// Dense exact linear algebra: canonical reduced row-echelon bases of subspaces
// of K^n. Two RowSpaces over the same field describe the same subspace iff
// their row lists are identical.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/field.hpp"

namespace foldkit {

template <Field F>
using Vector = std::vector<typename F::value_type>;

template <Field F>
bool is_zero_vector(const F& field, std::span<const typename F::value_type> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return field.is_zero(x); });
}

template <Field F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

/// v += c * w
template <Field F>
void axpy(const F& field, Vector<F>& v, const typename F::value_type& c, const Vector<F>& w) {
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(w[i])) v[i] = field.add(v[i], field.mul(c, w[i]));
}

template <Field F>
class RowSpace {
 public:
  RowSpace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  const F& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }
  const std::vector<Vector<F>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the echelon rows in place; v ends up zero iff it lies in the span.
  void reduce(Vector<F>& v) const {
    check_length(v.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (!field_.is_zero(c)) axpy(field_, v, field_.neg(c), rows_[r]);
    }
  }

  bool contains(Vector<F> v) const {
    reduce(v);
    return is_zero_vector(field_, std::span<const typename F::value_type>(v));
  }

  /// Adds v to the span keeping the basis in reduced echelon form. Returns
  /// true iff the rank grew.
  bool insert(Vector<F> v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < ambient_ && field_.is_zero(v[pivot])) ++pivot;
    if (pivot == ambient_) return false;
    auto scale = field_.inv(v[pivot]);
    for (auto& x : v)
      if (!field_.is_zero(x)) x = field_.mul(x, scale);
    for (auto& row : rows_) {
      const auto c = row[pivot];
      if (!field_.is_zero(c)) axpy(field_, row, field_.neg(c), v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::string>{}(field_.descriptor()) ^ (ambient_ * 0x9e3779b97f4a7c15ULL);
    for (const auto& row : rows_)
      for (const auto& x : row) h = h * 1000003u ^ field_.hash(x);
    return h;
  }

  friend bool operator==(const RowSpace& a, const RowSpace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void check_length(std::size_t n) const {
    if (n != ambient_)
      fail(ErrorKind::DimensionMismatch,
           "vector of length " + std::to_string(n) + " in ambient dimension " + std::to_string(ambient_));
  }

  F field_;
  std::size_t ambient_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
RowSpace<F> rref(const F& field, std::span<const Vector<F>> vectors, std::size_t ambient) {
  RowSpace<F> space(field, ambient);
  for (const auto& v : vectors) space.insert(v);
  return space;
}

template <Field F>
RowSpace<F> rref(const F& field, const std::vector<Vector<F>>& vectors, std::size_t ambient) {
  return rref(field, std::span<const Vector<F>>(vectors), ambient);
}

template <Field F>
RowSpace<F> subspace_sum(const RowSpace<F>& a, const RowSpace<F>& b) {
  if (!(a.field() == b.field()))
    fail(ErrorKind::FieldMismatch, a.field().descriptor() + " vs " + b.field().descriptor());
  if (a.ambient() != b.ambient())
    fail(ErrorKind::DimensionMismatch,
         std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()));
  RowSpace<F> sum = a;
  for (const auto& row : b.rows()) sum.insert(row);
  return sum;
}

template <Field F>
bool contains(const RowSpace<F>& space, const Vector<F>& v) {
  return space.contains(v);
}

/// Intersection of `space` with the coordinate subspace spanned by the
/// coordinates in `keep`. Uses an echelon form with the other coordinates
/// eliminated first.
template <Field F>
RowSpace<F> intersect_coordinate_subspace(const RowSpace<F>& space, const std::vector<bool>& keep) {
  const auto n = space.ambient();
  if (keep.size() != n) fail(ErrorKind::DimensionMismatch, "coordinate mask length");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (!keep[i]) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) order.push_back(i);
  const auto& field = space.field();
  RowSpace<F> permuted(field, n);
  for (const auto& row : space.rows()) {
    Vector<F> p(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) p[i] = row[order[i]];
    permuted.insert(std::move(p));
  }
  const std::size_t dropped = n - static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true));
  RowSpace<F> result(field, n);
  for (std::size_t r = 0; r < permuted.rank(); ++r) {
    if (permuted.pivots()[r] < dropped) continue;
    Vector<F> v(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) v[order[i]] = permuted.rows()[r][i];
    result.insert(std::move(v));
  }
  return result;
}

}  // namespace foldkit
