// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace foldkit;
using namespace fixtures;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      summary += (summary.empty() ? "" : "; ") + std::string("FAILED ") + what;
    }
  }
  void note(const std::string& what) {
    if (ok) summary += (summary.empty() ? "" : "; ") + what;
  }
};

PrimeField f2{2}, f3{3};

io::QuiverInput preset_quiver(const std::string& name) {
  for (const auto& [n, text] : presets::all)
    if (n == name) return io::parse_quiver(json::parse(text));
  throw std::runtime_error("missing preset " + name);
}

template <Field F>
std::size_t monoid_size(const AlgebraPtr<F>& a) {
  return monoid_closure(a, a->normal_form()->presentation.quiver.vertices(), vertex_ideals(a)).size();
}

Outcome folding_exactness() {
  Outcome o;
  const char* argv[] = {"foldkit", "fold", "--preset", "a3_swap", "--json"};
  std::ostringstream out, err;
  const int code = cli::run_cli(5, argv, out, err);
  o.require(code == 0, "exit code " + std::to_string(code));
  const auto expected = R"({"C":[[2,-1],[-2,2]],"D":[2,1],"Omega":[["o_1","o_2"]],"index":["o_1","o_2"]})";
  const auto got = out.str();
  o.require(got == std::string(expected) + "\n", "output " + got);
  o.note("fold a3_swap -> " + got.substr(0, got.size() - 1));
  return o;
}

Outcome vanishing_identities() {
  Outcome o;
  const auto in = preset_quiver("a3_swap");
  const auto t = fold(in.quiver, in.action());
  auto pc = gls_pi(t, f2);
  auto pq = preprojective(in.quiver, f2);
  const auto l = vertex_ideals(pc);
  const auto i = vertex_ideals(pq);
  const auto lc = theta_prime(l, {0, 1, 0, 1}, pc);
  const auto iq = theta_prime(i, {0, 1, 2, 0, 1, 2}, pq);
  o.require(lc.is_zero(), "L1 L2 L1 L2 has dimension " + std::to_string(lc.dimension()));
  o.require(iq.is_zero(), "I1 I2 I2' I1 I2 I2' has dimension " + std::to_string(iq.dimension()));
  o.note("L1L2L1L2 = 0 in dim-" + std::to_string(pc->dimension()) + " Pi(C,D,Omega); I1I2I2'I1I2I2' = 0 in dim-" +
         std::to_string(pq->dimension()) + " Pi(A3)");
  return o;
}

Outcome bijection_cardinalities() {
  Outcome o;
  const auto d4in = preset_quiver("d4_rot3");
  const auto g2t = fold(d4in.quiver, d4in.action());
  struct Row {
    std::string name;
    std::size_t monoid;
    std::size_t weyl;
    std::size_t expected;
  };
  std::vector<Row> rows{
      {"<I1,I2>", monoid_size(preprojective(a2(), f2)), oracle::weyl_order({{2, -1}, {-1, 2}}), 6},
      {"<I1,I2,I2'>", monoid_size(preprojective(a3(), f2)), oracle::weyl_order(a3_cartan()), 24},
      {"<L1,L2> B2", monoid_size(gls_pi(b2(), f2)), oracle::weyl_order(b2().C), 8},
      {"<L> G2", monoid_size(gls_pi(g2t, f3)), oracle::weyl_order(g2t.C), 12},
  };
  for (const auto& r : rows) {
    o.require(r.monoid == r.weyl && r.weyl == r.expected,
              r.name + " = " + std::to_string(r.monoid) + ", |W| = " + std::to_string(r.weyl));
    o.note(r.name + " = " + std::to_string(r.monoid));
  }
  return o;
}

Outcome reduced_word_independence() {
  Outcome o;
  struct Case {
    std::string name;
    AlgebraPtr<PrimeField> a;
    CartanMatrix c;
  };
  for (const auto& c : {Case{"A2", preprojective(a2(), f2), {{2, -1}, {-1, 2}}},
                        Case{"A3", preprojective(linear(3), f2), a3_cartan()},
                        Case{"B2", gls_pi(b2(), f2), b2().C}}) {
    WeylGroup w(c.c, {});
    const auto gens = vertex_ideals(c.a);
    std::size_t words = 0;
    bool ok = true;
    for (std::size_t x = 0; x < w.order(); ++x) {
      const auto all = w.all_reduced_words(x);
      const auto first = theta_prime(gens, all.front(), c.a);
      for (const auto& word : all) {
        ++words;
        ok = ok && theta_prime(gens, word, c.a) == first;
      }
    }
    o.require(ok, c.name + " reduced words disagree");
    o.note(c.name + ": " + std::to_string(words) + " words");
  }
  return o;
}

Outcome demazure_relations() {
  Outcome o;
  for (const auto& [name, c] : std::vector<std::pair<std::string, CartanMatrix>>{
           {"A2", {{2, -1}, {-1, 2}}}, {"A3", a3_cartan()}, {"B2", b2().C}, {"G2", g2().C}}) {
    WeylGroup w(c, {});
    bool rel = true;
    for (const auto& r : check_presentation(w)) rel = rel && r.group_ok && r.monoid_ok;
    o.require(rel, name + " presentation relation");
    bool well_defined = true;
    for (std::size_t u = 0; u < w.order(); ++u)
      for (std::size_t v = 0; v < w.order(); ++v) {
        const auto expected = w.demazure_product(u, v);
        for (const auto& word : w.all_reduced_words(v)) {
          auto x = u;
          for (auto i : word) x = w.demazure_step(x, i);
          well_defined = well_defined && x == expected;
        }
      }
    o.require(well_defined, name + " Demazure product depends on the reduced word");
  }
  o.note("relations and Demazure well-definedness hold for A2, A3, B2, G2");
  return o;
}

Outcome psi_checks() {
  Outcome o;
  for (const auto& [name, expected] : std::vector<std::pair<std::string, std::size_t>>{{"a3_swap", 8}, {"d4_rot3", 12}}) {
    const auto in = preset_quiver(name);
    const auto act = in.action();
    const auto t = fold(in.quiver, act);
    WeylGroup wc(t.C, t.index);
    auto wq = WeylGroup::of_quiver(in.quiver);
    FoldingMap psi(wc, wq, orbits_and_stabilizers(in.quiver, act).vertex_orbits);
    const auto fixed = fixed_subgroup(wq, vertex_permutations(act));
    std::set<std::size_t> image;
    bool hom = true, reduced = true;
    for (std::size_t u = 0; u < wc.order(); ++u) {
      image.insert(psi.psi(u));
      for (std::size_t v = 0; v < wc.order(); ++v) hom = hom && psi.psi(wc.multiply(u, v)) == wq.multiply(psi.psi(u), psi.psi(v));
      for (const auto& word : wc.all_reduced_words(u)) reduced = reduced && psi.check_reduced_image(word);
    }
    o.require(hom, name + " psi not multiplicative");
    o.require(image.size() == wc.order(), name + " psi not injective");
    o.require(image == std::set<std::size_t>(fixed.begin(), fixed.end()), name + " image != W(Q)^G");
    o.require(fixed.size() == expected, name + " |W(Q)^G| = " + std::to_string(fixed.size()));
    o.require(reduced, name + " non-reduced image");
    o.note(name + ": |W(Q)^G| = " + std::to_string(fixed.size()));
  }
  return o;
}

Outcome proposition_a() {
  Outcome o;
  for (const auto& [name, field] : std::vector<std::pair<std::string, PrimeField>>{{"a3_swap", f2}, {"d4_rot3", f3}}) {
    const auto r = verify_prop_a(preset_quiver(name), field, {}, name);
    o.require(r.passed(), name + "\n" + r.to_text());
    const auto* sq = r.find("square");
    const auto* skew = r.find("skew-square");
    o.require(sq && skew, name + " missing checks");
    if (sq && skew) o.note(name + ": square on " + sq->values["elements"].dump() + " elements, skew square ok");
  }
  return o;
}

Outcome quotient_dimensions() {
  Outcome o;
  for (const auto& [name, field] : std::vector<std::pair<std::string, PrimeField>>{{"a3_swap", f2}, {"d4_rot3", f3}}) {
    const auto in = preset_quiver(name);
    const auto t = fold(in.quiver, in.action());
    auto pc = gls_pi(t, field);
    const auto l = vertex_ideals(pc);
    std::string dims;
    for (std::size_t i = 0; i < t.rank(); ++i) {
      o.require(l[i].codimension() == static_cast<std::size_t>(t.D[i]), name + " dim Pi/L_" + t.index[i]);
      dims += (dims.empty() ? "" : ",") + std::to_string(l[i].codimension());
    }
    for (const auto& i : vertex_ideals(preprojective(in.quiver, field)))
      o.require(i.codimension() == 1, name + " dim Pi(Q)/I_i");
    o.note(name + ": dim Pi/L = (" + dims + ")");
  }
  return o;
}

Outcome skew_structure() {
  Outcome o;
  const auto in = preset_quiver("a3_swap");
  const auto act = in.action();
  auto a = preprojective(in.quiver, f2);
  const auto dq = double_quiver(in.quiver);
  auto group = induced_group_action(*a, act, [&](const QuiverAutomorphism& g) { return g.on_double(dq); });
  auto s = skew_group_algebra(a, group);
  o.require(s.algebra()->dimension() == 2 * a->dimension(), "dim A#G");
  o.require(s.check_conjugation(), "conjugation identity");
  auto m = monoid_closure(a, in.quiver.vertices(), vertex_ideals(a));
  auto inv = invariant_submonoid(m, group.automorphisms);
  auto image = induced_monoid_map(inv, s);
  bool round_trip = true;
  for (std::size_t k = 0; k < image.size(); ++k) {
    auto [graded, base] = graded_part(image.elements[k], s);
    round_trip = round_trip && graded && base == inv.elements[k];
  }
  o.require(round_trip, "graded_part o induced_ideal != id");
  // the graded ideals generated by the I_i # G are exactly the image
  std::vector<Ideal<PrimeField>> gens;
  for (const auto& g : inv.generators) gens.push_back(induced_ideal(g, s));
  auto graded = monoid_closure(s.algebra(), inv.generator_labels, gens);
  bool onto = graded.size() == image.size();
  for (const auto& e : graded.elements) onto = onto && image.find(e).has_value();
  o.require(onto, "image differs from the graded-ideal monoid");
  o.note("dim Pi(A3)#G = " + std::to_string(s.algebra()->dimension()) + ", monoid of " +
         std::to_string(image.size()) + " graded ideals");
  return o;
}

Outcome engine_cross_validation() {
  Outcome o;
  struct Case {
    std::string name;
    Quiver q;
    oracle::SmallQuiver small;
  };
  for (const auto& c : {Case{"A2", a2(), {2, {{0, 1}}}}, Case{"A3", a3(), {3, {{1, 0}, {2, 0}}}},
                        Case{"D4", d4(), {4, {{1, 0}, {2, 0}, {3, 0}}}}}) {
    const auto engine = preprojective(c.q, f3)->dimension();
    const auto reference = oracle::total(oracle::preprojective_graded_dims(c.small, 3));
    const auto symmetric = gls_pi(symmetric_triple(c.q), f3)->dimension();
    o.require(engine == reference, c.name + " engine " + std::to_string(engine) + " vs oracle " + std::to_string(reference));
    o.require(symmetric == engine, c.name + " Pi(C,I,Omega) = " + std::to_string(symmetric));
    o.note(c.name + ": " + std::to_string(engine));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "folding exactness", 1, folding_exactness},
      {2, "vanishing identities", 5, vanishing_identities},
      {3, "bijection cardinalities", 30, bijection_cardinalities},
      {4, "reduced-word independence", 60, reduced_word_independence},
      {5, "Demazure/monoid relations", 0, demazure_relations},
      {6, "psi and reduced images", 0, psi_checks},
      {7, "folding square", 120, proposition_a},
      {8, "quotient dimensions", 0, quotient_dimensions},
      {9, "skew group structure", 0, skew_structure},
      {10, "engine cross-validation", 60, engine_cross_validation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.summary = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && seconds >= c.limit) out.require(false, "runtime limit " + std::to_string(c.limit) + " s");
    failures += out.ok ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (out.ok ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << std::fixed << std::setprecision(3) << seconds << " s] " << out.summary << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
