#pragma once

// Quiver-with-relations presentations of the preprojective algebra of a
// quiver and of the algebras H(C, D, Omega) and Pi(C, D, Omega) of a Cartan
// triple.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "foldkit/error.hpp"
#include "foldkit/field.hpp"
#include "foldkit/path.hpp"
#include "foldkit/quiver.hpp"

namespace foldkit {

template <Field F>
struct Presentation {
  Quiver quiver;
  std::vector<PathElement<F>> relations;
  F field;
};

namespace detail {

template <Field F>
void push_relation(Presentation<F>& p, PathElement<F> r) {
  if (!r.is_zero()) p.relations.push_back(std::move(r));
}

/// eps^k as a path at vertex v (trivial path for k == 0).
inline Path loop_power(std::size_t loop, std::size_t v, int k) {
  if (k == 0) return Path::trivial(v);
  return Path{std::vector<std::size_t>(static_cast<std::size_t>(k), loop), v, v};
}

inline Path join(const Path& a, const Path& b) {
  auto p = concatenate(a, b);
  if (!p) fail(ErrorKind::InvalidInput, "relation term does not compose");
  return *p;
}

}  // namespace detail

/// Relations e_i (sum_alpha alpha alpha* - alpha* alpha) e_i over the double
/// quiver, one per vertex that has at least one arrow.
template <Field F>
Presentation<F> preprojective_presentation(const Quiver& q, const F& field) {
  q.require_acyclic();
  auto d = double_quiver(q);
  Presentation<F> p{d.quiver, {}, field};
  const auto& dq = p.quiver;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    PathElement<F> r(field);
    for (std::size_t a = 0; a < d.original_arrows; ++a) {
      const auto& arrow = q.arrow(a);
      if (arrow.target == v) r.add_term(Path::of_word(dq, {a, d.star[a]}), field.one());
      if (arrow.source == v) r.add_term(Path::of_word(dq, {d.star[a], a}), field.neg(field.one()));
    }
    detail::push_relation(p, std::move(r));
  }
  return p;
}

/// Nilpotency eps_k^{c_k} and commutativity
/// eps_i^{c_i/g} alpha_ij - alpha_ij eps_j^{c_j/g}, g = gcd(c_i, c_j).
template <Field F>
Presentation<F> gls_H_presentation(const CartanTriple& t, const F& field) {
  auto cq = quiver_of_cartan(t, false);
  Presentation<F> p{cq.quiver, {}, field};
  for (std::size_t k = 0; k < t.rank(); ++k)
    detail::push_relation(p, PathElement<F>::of(field, detail::loop_power(cq.loop[k], k, t.D[k]), field.one()));
  for (const auto& [key, arrow] : cq.arrow_of) {
    const auto [i, j, g] = key;
    const int common = std::gcd(t.D[i], t.D[j]);
    const auto a = Path::of_arrow(p.quiver, arrow);
    PathElement<F> r(field);
    r.add_term(detail::join(detail::loop_power(cq.loop[i], i, t.D[i] / common), a), field.one());
    r.add_term(detail::join(a, detail::loop_power(cq.loop[j], j, t.D[j] / common)), field.neg(field.one()));
    detail::push_relation(p, std::move(r));
  }
  return p;
}

/// (P1) nilpotency, (P2) commutativity over Omega ∪ Omega^op and (P3) the
/// mesh relation at every vertex, with sign +1 on Omega and -1 on Omega^op.
template <Field F>
Presentation<F> gls_pi_presentation(const CartanTriple& t, const F& field) {
  auto cq = quiver_of_cartan(t, true);
  Presentation<F> p{cq.quiver, {}, field};
  const auto n = t.rank();
  for (std::size_t k = 0; k < n; ++k)
    detail::push_relation(p, PathElement<F>::of(field, detail::loop_power(cq.loop[k], k, t.D[k]), field.one()));
  for (const auto& [key, arrow] : cq.arrow_of) {
    const auto [i, j, g] = key;
    const int common = std::gcd(t.D[i], t.D[j]);
    const auto a = Path::of_arrow(p.quiver, arrow);
    PathElement<F> r(field);
    r.add_term(detail::join(detail::loop_power(cq.loop[i], i, t.D[i] / common), a), field.one());
    r.add_term(detail::join(a, detail::loop_power(cq.loop[j], j, t.D[j] / common)), field.neg(field.one()));
    detail::push_relation(p, std::move(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    PathElement<F> mesh(field);
    for (std::size_t j = 0; j < n; ++j) {
      const bool forward = t.in_omega(i, j);
      if (!forward && !t.in_omega(j, i)) continue;
      const auto sign = forward ? field.one() : field.neg(field.one());
      const int multiplicity = positive_gcd(t.C[i][j], t.C[j][i]);
      const int top = t.D[i] / std::gcd(t.D[i], t.D[j]);
      for (int g = 1; g <= multiplicity; ++g) {
        const auto cycle = detail::join(Path::of_arrow(p.quiver, cq.arrow_of.at({i, j, g})),
                                        Path::of_arrow(p.quiver, cq.arrow_of.at({j, i, g})));
        for (int l = 0; l < top; ++l) {
          auto term = detail::join(detail::join(detail::loop_power(cq.loop[i], i, l), cycle),
                                   detail::loop_power(cq.loop[i], i, top - 1 - l));
          mesh.add_term(term, sign);
        }
      }
    }
    detail::push_relation(p, std::move(mesh));
  }
  return p;
}

}  // namespace foldkit
