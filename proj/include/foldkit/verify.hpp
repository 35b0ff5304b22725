#pragma once

// End-to-end verification pipelines: the folding square relating the ideal
// monoid of Pi(C, D, Omega) to the invariant ideal monoid of Pi(Q), and the
// finite consequences of the Morita equivalence Pi(Q)#G ~ Pi(C, D, Omega)
// for cyclic p-groups in characteristic p.

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "foldkit/algebra.hpp"
#include "foldkit/error.hpp"
#include "foldkit/ideal.hpp"
#include "foldkit/io.hpp"
#include "foldkit/presentation.hpp"
#include "foldkit/quiver.hpp"
#include "foldkit/skew.hpp"
#include "foldkit/weyl.hpp"

namespace foldkit {

enum class CheckStatus { Pass, Fail, Error };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

struct Check {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json values = nlohmann::json::object();
  std::string detail;
  double seconds = 0;
};

struct VerificationReport {
  std::string instance;
  std::string field;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status != CheckStatus::Pass) return false;
    return !checks.empty();
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name},
                    {"anchor", c.anchor},
                    {"status", to_string(c.status)},
                    {"values", c.values},
                    {"detail", c.detail},
                    {"seconds", c.seconds}});
    return {{"instance", instance}, {"field", field}, {"status", passed() ? "pass" : "fail"},
            {"checks", cs}, {"notes", notes}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "instance " << instance << " over " << field << "\n";
    for (const auto& c : checks) {
      out << "  [" << to_string(c.status) << "] " << c.name << "  (" << c.anchor << ")";
      if (!c.values.empty()) out << "  " << c.values.dump();
      if (!c.detail.empty()) out << "  -- " << c.detail;
      out << "\n";
    }
    for (const auto& n : notes) out << "  note: " << n << "\n";
    out << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

struct VerifyCaps {
  EngineCaps engine;
  std::size_t element_cap = 100000;
};

namespace detail {

/// Runs `body`, which fills values and returns the verdict. Cap errors
/// propagate; other library errors become an Error status.
inline void run_check(VerificationReport& report, std::string name, std::string anchor,
                      const std::function<bool(Check&)>& body) {
  Check c{std::move(name), std::move(anchor)};
  const auto start = std::chrono::steady_clock::now();
  try {
    c.status = body(c) ? CheckStatus::Pass : CheckStatus::Fail;
  } catch (const Error& e) {
    if (e.is_cap()) throw;
    c.status = CheckStatus::Error;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(c));
}

/// Index reached by walking `word` through the monoid's right action from the unit.
template <Field F>
std::size_t walk(const IdealMonoid<F>& m, const std::vector<std::size_t>& word, std::size_t start = 0) {
  for (auto g : word) start = m.right_action.at(start).at(g);
  return start;
}

}  // namespace detail

/// Every object the folding checks need, built once.
template <Field F>
struct FoldingPipeline {
  Quiver quiver;
  GroupAction action;
  OrbitData orbits;
  CartanTriple triple;
  std::unique_ptr<WeylGroup> weyl_c;
  std::unique_ptr<WeylGroup> weyl_q;
  std::unique_ptr<FoldingMap> folding;
  AlgebraPtr<F> pi_q;
  AlgebraPtr<F> pi_c;
  AlgebraGroupAction<F> algebra_action;
  IdealMonoid<F> monoid_q;
  IdealMonoid<F> monoid_c;
  IdealMonoid<F> invariant_q;
  std::vector<Ideal<F>> orbit_ideals;
  /// theta_q[w] / theta_c[w]: monoid index of the ideal attached to w.
  std::vector<std::size_t> theta_q;
  std::vector<std::size_t> theta_c;
};

template <Field F>
FoldingPipeline<F> build_folding_pipeline(const io::QuiverInput& input, const F& field, const VerifyCaps& caps) {
  auto action = input.action();
  const auto& q = input.quiver;
  auto orbits = orbits_and_stabilizers(q, action);
  auto triple = fold(q, action);
  auto weyl_c = std::make_unique<WeylGroup>(triple.C, triple.index, caps.element_cap);
  auto weyl_q = std::make_unique<WeylGroup>(WeylGroup::of_quiver(q, caps.element_cap));
  auto folding = std::make_unique<FoldingMap>(*weyl_c, *weyl_q, orbits.vertex_orbits);
  auto pi_q = normal_form_engine(preprojective_presentation(q, field), caps.engine);
  auto pi_c = normal_form_engine(gls_pi_presentation(triple, field), caps.engine);
  const auto dq = double_quiver(q);
  auto algebra_action =
      induced_group_action(*pi_q, action, [&](const QuiverAutomorphism& g) { return g.on_double(dq); });
  auto vi = vertex_ideals(pi_q);
  auto monoid_q = monoid_closure(pi_q, q.vertices(), vi, caps.element_cap);
  auto monoid_c = monoid_closure(pi_c, triple.index, vertex_ideals(pi_c), caps.element_cap);
  auto invariant_q = invariant_submonoid(monoid_q, algebra_action.automorphisms);
  std::vector<Ideal<F>> orbit_ideals;
  for (const auto& orbit : orbits.vertex_orbits) orbit_ideals.push_back(orbit_ideal(vi, orbit));
  FoldingPipeline<F> p{q,
                       std::move(action),
                       std::move(orbits),
                       std::move(triple),
                       std::move(weyl_c),
                       std::move(weyl_q),
                       std::move(folding),
                       std::move(pi_q),
                       std::move(pi_c),
                       std::move(algebra_action),
                       std::move(monoid_q),
                       std::move(monoid_c),
                       std::move(invariant_q),
                       std::move(orbit_ideals),
                       {},
                       {}};
  for (std::size_t w = 0; w < p.weyl_q->order(); ++w)
    p.theta_q.push_back(detail::walk(p.monoid_q, p.weyl_q->reduced_word(w)));
  for (std::size_t w = 0; w < p.weyl_c->order(); ++w)
    p.theta_c.push_back(detail::walk(p.monoid_c, p.weyl_c->reduced_word(w)));
  return p;
}

namespace detail {

/// Theta: W -> monoid is a bijective monoid map from the Demazure product.
template <Field F>
bool theta_is_isomorphism(const WeylGroup& w, const IdealMonoid<F>& m, const std::vector<std::size_t>& theta,
                          Check& c) {
  c.values["weyl_order"] = w.order();
  c.values["monoid_size"] = m.size();
  if (w.order() != m.size()) return false;
  if (std::set<std::size_t>(theta.begin(), theta.end()).size() != theta.size()) {
    c.detail = "two Weyl elements give the same ideal";
    return false;
  }
  for (std::size_t u = 0; u < w.order(); ++u)
    for (std::size_t v = 0; v < w.order(); ++v)
      if (theta[w.demazure_product(u, v)] != m.table[theta[u]][theta[v]]) {
        c.detail = "Demazure product is not carried to the ideal product";
        return false;
      }
  return true;
}

template <Field F>
void add_folding_checks(VerificationReport& report, const FoldingPipeline<F>& p, const std::optional<SkewAlgebra<F>>& skew) {
  const auto& wc = *p.weyl_c;
  const auto& wq = *p.weyl_q;
  const auto& psi = *p.folding;

  run_check(report, "fold", "folding of a quiver with automorphisms into a Cartan triple", [&](Check& c) {
    c.values = io::cartan_to_json(p.triple);
    c.values["group_order"] = p.action.order();
    p.triple.validate();
    return true;
  });

  run_check(report, "psi", "psi: W(C) -> W(Q)^G, r_i -> product of s_j over the orbit", [&](Check& c) {
    const auto fixed = fixed_subgroup(wq, vertex_permutations(p.action));
    std::set<std::size_t> image;
    for (std::size_t u = 0; u < wc.order(); ++u) image.insert(psi.psi(u));
    c.values["order_W(C)"] = wc.order();
    c.values["order_W(Q)"] = wq.order();
    c.values["order_W(Q)^G"] = fixed.size();
    if (image.size() != wc.order()) {
      c.detail = "psi is not injective";
      return false;
    }
    if (image != std::set<std::size_t>(fixed.begin(), fixed.end())) {
      c.detail = "image of psi differs from W(Q)^G";
      return false;
    }
    for (std::size_t u = 0; u < wc.order(); ++u)
      for (std::size_t v = 0; v < wc.order(); ++v)
        if (psi.psi(wc.multiply(u, v)) != wq.multiply(psi.psi(u), psi.psi(v))) {
          c.detail = "psi is not multiplicative";
          return false;
        }
    return true;
  });

  run_check(report, "reduced-images", "expansions of reduced words of W(C) are reduced in W(Q)", [&](Check& c) {
    std::size_t words = 0;
    for (std::size_t u = 0; u < wc.order(); ++u)
      for (const auto& word : wc.all_reduced_words(u)) {
        ++words;
        std::size_t expected = 0;
        for (auto i : word) expected += psi.orbits()[i].size();
        if (!psi.check_reduced_image(word) || wq.length(psi.psi(u)) != expected) {
          c.detail = "a reduced word expands to a non-reduced word";
          return false;
        }
      }
    c.values["reduced_words"] = words;
    return true;
  });

  run_check(report, "psi-prime", "psi': WM(C) -> WM(Q)^G on Demazure carriers", [&](Check& c) {
    for (std::size_t u = 0; u < wc.order(); ++u)
      for (std::size_t v = 0; v < wc.order(); ++v)
        if (psi.psi_prime(wc.demazure_product(u, v)) !=
            wq.demazure_product(psi.psi_prime(u), psi.psi_prime(v)))
          return false;
    for (std::size_t i = 0; i < wc.rank(); ++i)
      if (psi.psi_prime(wc.generator(i)) != wq.rho(psi.orbits()[i])) {
        c.detail = "f_i is not sent to the product of the h_j over its orbit";
        return false;
      }
    c.values["monoid_size"] = wc.order();
    return true;
  });

  run_check(report, "algebras", "Pi(Q) and Pi(C, D, Omega) realized with normal-word bases", [&](Check& c) {
    c.values["dim_Pi(Q)"] = p.pi_q->dimension();
    c.values["dim_Pi(C,D,Omega)"] = p.pi_c->dimension();
    return p.pi_q->check_unit_and_idempotents() && p.pi_c->check_unit_and_idempotents() &&
           p.pi_q->check_relations() && p.pi_c->check_relations() && p.pi_q->check_associativity() &&
           p.pi_c->check_associativity();
  });

  run_check(report, "theta-Q", "Theta_Q: WM(Q) -> <I_i> is an isomorphism",
            [&](Check& c) { return theta_is_isomorphism(wq, p.monoid_q, p.theta_q, c); });

  run_check(report, "theta-C", "Theta_C: WM(C) -> <L_i> is an isomorphism",
            [&](Check& c) { return theta_is_isomorphism(wc, p.monoid_c, p.theta_c, c); });

  run_check(report, "invariant-submonoid", "<I_i>^G is generated by the orbit ideals I_i", [&](Check& c) {
    c.values["size"] = p.invariant_q.size();
    c.values["generators"] = p.invariant_q.generator_labels;
    if (p.invariant_q.generators.size() != p.orbit_ideals.size()) return false;
    for (const auto& gen : p.orbit_ideals)
      if (std::find(p.invariant_q.generators.begin(), p.invariant_q.generators.end(), gen) ==
          p.invariant_q.generators.end())
        return false;
    return true;
  });

  // Psi sends L_j to I_j; defined on words of <L_j> and checked to be a
  // well-defined bijective monoid map onto <I_i>^G.
  std::vector<std::size_t> psi_monoid(p.monoid_c.size());
  run_check(report, "Psi", "Psi: <L_i> -> <I_i>^G, L_i -> I_i, well defined and bijective", [&](Check& c) {
    for (std::size_t k = 0; k < p.monoid_c.size(); ++k)
      psi_monoid[k] = walk(p.monoid_q, psi.expand(p.monoid_c.words[k]));
    for (std::size_t k = 0; k < p.monoid_c.size(); ++k)
      for (std::size_t j = 0; j < wc.rank(); ++j)
        if (psi_monoid[p.monoid_c.right_action[k][j]] != walk(p.monoid_q, psi.orbits()[j], psi_monoid[k])) {
          c.detail = "Psi is not well defined";
          return false;
        }
    std::set<std::size_t> image(psi_monoid.begin(), psi_monoid.end());
    c.values["image_size"] = image.size();
    c.values["invariant_size"] = p.invariant_q.size();
    if (image.size() != p.monoid_c.size() || image.size() != p.invariant_q.size()) return false;
    for (auto k : image)
      if (!p.invariant_q.find(p.monoid_q.elements[k])) return false;
    return true;
  });

  run_check(report, "square", "Psi ∘ Theta_C = Theta_Q^G ∘ psi' on all of WM(C)", [&](Check& c) {
    std::size_t checked = 0;
    for (std::size_t w = 0; w < wc.order(); ++w, ++checked)
      if (psi_monoid[p.theta_c[w]] != p.theta_q[psi.psi_prime(w)]) {
        c.detail = "square fails at " + p.monoid_c.word_label(p.theta_c[w]);
        return false;
      }
    c.values["elements"] = checked;
    return true;
  });

  if (!skew) return;
  run_check(report, "skew-square", "Theta_Q^G(psi'(w)) # G equals the product of the I_i # G along w", [&](Check& c) {
    const auto& s = *skew;
    std::vector<Ideal<F>> gens;
    for (const auto& gen : p.orbit_ideals) gens.push_back(induced_ideal(gen, s));
    auto graded = monoid_closure(s.algebra(), p.triple.index, gens);
    c.values["graded_monoid_size"] = graded.size();
    if (graded.size() != wc.order()) return false;
    for (std::size_t w = 0; w < wc.order(); ++w) {
      const auto lhs = walk(graded, wc.reduced_word(w));
      const auto rhs = induced_ideal(p.monoid_q.elements[p.theta_q[psi.psi_prime(w)]], s);
      if (!(graded.elements[lhs] == rhs)) return false;
    }
    return true;
  });
}

}  // namespace detail

template <Field F>
VerificationReport verify_prop_a(const io::QuiverInput& input, const F& field, const VerifyCaps& caps = {},
                                 std::string instance = "quiver") {
  VerificationReport report{std::move(instance), field.descriptor(), {}, {}};
  const auto p = build_folding_pipeline(input, field, caps);
  const auto skew = skew_group_algebra(p.pi_q, p.algebra_action);
  detail::add_folding_checks(report, p, std::optional<SkewAlgebra<F>>(skew));
  return report;
}

/// Throws HypothesisViolated unless char K = p, G is cyclic of order p^a and
/// every arrow stabilizer is the intersection of its endpoint stabilizers.
template <Field F>
void check_theorem_b_hypotheses(const io::QuiverInput& input, const F& field) {
  const auto action = input.action();
  const auto p = field.characteristic();
  if (p == 0) fail(ErrorKind::HypothesisViolated, "characteristic 0; a prime field F_p is required");
  if (!action.is_cyclic()) fail(ErrorKind::HypothesisViolated, "the group is not cyclic");
  auto m = action.order();
  while (m % p == 0) m /= p;
  if (m != 1)
    fail(ErrorKind::HypothesisViolated,
         "|G| = " + std::to_string(action.order()) + " is not a power of char K = " + std::to_string(p));
  if (!check_star_condition(input.quiver, action))
    fail(ErrorKind::HypothesisViolated, "an arrow stabilizer differs from the intersection of its endpoint stabilizers");
}

template <Field F>
VerificationReport verify_theorem_b(const io::QuiverInput& input, const F& field, const VerifyCaps& caps = {},
                                    std::string instance = "quiver") {
  check_theorem_b_hypotheses(input, field);
  VerificationReport report{std::move(instance), field.descriptor(), {}, {}};
  const auto p = build_folding_pipeline(input, field, caps);
  const auto skew = skew_group_algebra(p.pi_q, p.algebra_action);

  detail::run_check(report, "hypotheses", "char K = p, G cyclic of order p^a, stabilizer condition (*)",
                    [&](Check& c) {
                      c.values["characteristic"] = field.characteristic();
                      c.values["group_order"] = p.action.order();
                      return check_star_condition(p.quiver, p.action);
                    });
  detail::add_folding_checks(report, p, std::optional<SkewAlgebra<F>>(skew));

  detail::run_check(report, "skew-algebra", "(a#g)(b#h) = a g(b) # gh and (1#g)(a#1)(1#g^-1) = g(a)#1",
                    [&](Check& c) {
                      c.values["dim_Pi(Q)#G"] = skew.algebra()->dimension();
                      c.values["dim_Pi(Q)"] = p.pi_q->dimension();
                      return skew.algebra()->dimension() == p.pi_q->dimension() * p.action.order() &&
                             skew.check_conjugation() && skew.check_embedding() &&
                             skew.algebra()->check_associativity();
                    });

  detail::run_check(report, "induced-monoid", "I -> I#G is a monoid isomorphism <I_i>^G -> graded ideals of Pi(Q)#G",
                    [&](Check& c) {
                      const auto image = induced_monoid_map(p.invariant_q, skew);
                      c.values["size"] = image.size();
                      for (std::size_t k = 0; k < image.size(); ++k) {
                        const auto [graded, base] = graded_part(image.elements[k], skew);
                        if (!graded || !(base == p.invariant_q.elements[k])) {
                          c.detail = "graded part does not recover " + p.invariant_q.word_label(k);
                          return false;
                        }
                      }
                      return image.size() == p.invariant_q.size();
                    });

  detail::run_check(report, "quotient-dimensions", "dim Pi(C,D,Omega)/L_i = c_i and dim Pi(Q)/I_i = 1",
                    [&](Check& c) {
                      bool ok = true;
                      for (std::size_t i = 0; i < p.triple.rank(); ++i) {
                        const auto codim = p.monoid_c.generators[i].codimension();
                        c.values["codim_L"][p.triple.index[i]] = codim;
                        ok = ok && codim == static_cast<std::size_t>(p.triple.D[i]);
                      }
                      for (std::size_t v = 0; v < p.quiver.vertex_count(); ++v) {
                        const auto codim = p.monoid_q.generators[v].codimension();
                        c.values["codim_I"][p.quiver.vertex_id(v)] = codim;
                        ok = ok && codim == 1;
                      }
                      return ok;
                    });

  detail::run_check(report, "longest-element", "Theta_C(w0) = 0 and Theta_Q(psi(w0)) = 0", [&](Check& c) {
    const auto& wc = *p.weyl_c;
    const auto w0 = wc.longest_element();
    const auto word = wc.reduced_word(w0);
    const auto expanded = p.folding->expand(word);
    c.values["w0"] = io::word_labels(wc, word);
    c.values["psi(w0)"] = io::word_labels(*p.weyl_q, expanded);
    const auto lc = theta_prime(p.monoid_c.generators, word, p.pi_c);
    const auto lq = theta_prime(p.monoid_q.generators, expanded, p.pi_q);
    c.values["dim_Theta_C(w0)"] = lc.dimension();
    c.values["dim_Theta_Q(psi(w0))"] = lq.dimension();
    return lc.is_zero() && lq.is_zero();
  });

  report.notes.push_back(
      "the Morita equivalence functor is not constructed; verified its computable consequences: the invariant/graded "
      "monoid isomorphism, the folding square, generalized simple dimensions and the longest-element vanishing");
  report.notes.push_back("dim Pi(C,D,Omega) = " + std::to_string(p.pi_c->dimension()) + ", dim Pi(Q)#G = " +
                         std::to_string(skew.algebra()->dimension()) + " (recorded, no relation asserted)");
  return report;
}

}  // namespace foldkit
