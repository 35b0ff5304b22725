#pragma once

#include <string>
#include <vector>

#include "foldkit/foldkit.hpp"

namespace fixtures {

using namespace foldkit;

inline Quiver a2() {
  Quiver q({"1", "2"});
  q.add_arrow("a", "1", "2");
  return q;
}

/// 2 -> 1 <- 2' with arrows a, a'.
inline Quiver a3() {
  Quiver q({"1", "2", "2'"});
  q.add_arrow("a", "2", "1");
  q.add_arrow("a'", "2'", "1");
  return q;
}

inline QuiverAutomorphism a3_swap() { return {{0, 2, 1}, {1, 0}}; }

/// Leaves 1, 2, 3 pointing at the centre c.
inline Quiver d4() {
  Quiver q({"c", "1", "2", "3"});
  q.add_arrow("a1", "1", "c");
  q.add_arrow("a2", "2", "c");
  q.add_arrow("a3", "3", "c");
  return q;
}

inline QuiverAutomorphism d4_rotation() { return {{0, 2, 3, 1}, {1, 2, 0}}; }

inline Quiver linear(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  Quiver q(v);
  for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return q;
}

inline CartanTriple b2() { return {{"1", "2"}, {{2, -1}, {-2, 2}}, {2, 1}, {{0, 1}}}; }
inline CartanTriple g2() { return {{"c", "l"}, {{2, -1}, {-3, 2}}, {3, 1}, {{0, 1}}}; }
inline CartanTriple a2_triple() { return {{"1", "2"}, {{2, -1}, {-1, 2}}, {1, 1}, {{1, 0}}}; }

inline std::vector<std::vector<int>> a3_cartan() { return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}; }

template <Field F>
AlgebraPtr<F> preprojective(const Quiver& q, const F& field) {
  return normal_form_engine(preprojective_presentation(q, field));
}

template <Field F>
AlgebraPtr<F> gls_pi(const CartanTriple& t, const F& field) {
  return normal_form_engine(gls_pi_presentation(t, field));
}

/// The naive ideal product span{x y : x in rows(I), y in rows(J)}.
template <Field F>
RowSpace<F> naive_product(const Ideal<F>& i, const Ideal<F>& j) {
  const auto& a = i.algebra();
  RowSpace<F> s(a.field(), a.dimension());
  for (const auto& x : i.rows())
    for (const auto& y : j.rows()) s.insert(a.multiply(x, y));
  return s;
}

}  // namespace fixtures
