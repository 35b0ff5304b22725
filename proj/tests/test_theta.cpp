#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace foldkit;
using namespace fixtures;

namespace {

PrimeField f2{2}, f3{3};

struct Instance {
  std::string name;
  AlgebraPtr<PrimeField> algebra;
  CartanMatrix cartan;
};

std::vector<Instance> instances() {
  return {{"A2", preprojective(a2(), f2), {{2, -1}, {-1, 2}}},
          {"A3", preprojective(a3(), f2), {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}},
          {"B2", gls_pi(b2(), f2), b2().C},
          {"G2", gls_pi(g2(), f3), g2().C}};
}

// Every reduced word of every element gives the same ideal.
TEST(Theta, IndependentOfReducedWord) {
  for (const auto& in : instances()) {
    if (in.cartan.size() > 3) continue;
    WeylGroup w(in.cartan, {});
    const auto gens = vertex_ideals(in.algebra);
    for (std::size_t x = 0; x < w.order(); ++x) {
      const auto words = w.all_reduced_words(x);
      const auto first = theta_prime(gens, words.front(), in.algebra);
      for (const auto& word : words) ASSERT_EQ(theta_prime(gens, word, in.algebra), first) << in.name;
    }
  }
}

TEST(Theta, IndependentOfReducedWordSampledOnD4) {
  auto a = preprojective(d4(), f3);
  auto w = WeylGroup::of_quiver(d4());
  const auto gens = vertex_ideals(a);
  std::mt19937 rng(99);
  for (int k = 0; k < 25; ++k) {
    const auto x = rng() % w.order();
    const auto words = w.all_reduced_words(x);
    const auto first = theta_prime(gens, words.front(), a);
    for (std::size_t s = 0; s < std::min<std::size_t>(words.size(), 6); ++s)
      EXPECT_EQ(theta_prime(gens, words[rng() % words.size()], a), first);
  }
}

// Theta(u) Theta(v) = Theta(u * v) with * the Demazure product, and Theta is injective.
TEST(Theta, DemazureCompatibleAndInjective) {
  for (const auto& in : instances()) {
    WeylGroup w(in.cartan, {});
    const auto labels = in.algebra->normal_form()->presentation.quiver.vertices();
    auto m = monoid_closure(in.algebra, labels, vertex_ideals(in.algebra));
    ASSERT_EQ(m.size(), w.order()) << in.name;
    std::vector<std::size_t> theta;
    for (std::size_t x = 0; x < w.order(); ++x) {
      const auto found = m.find(theta_prime(m.generators, w.reduced_word(x), in.algebra));
      ASSERT_TRUE(found.has_value());
      theta.push_back(*found);
    }
    EXPECT_EQ(std::set<std::size_t>(theta.begin(), theta.end()).size(), theta.size()) << in.name;
    for (std::size_t u = 0; u < w.order(); ++u)
      for (std::size_t v = 0; v < w.order(); ++v)
        ASSERT_EQ(m.table[theta[u]][theta[v]], theta[w.demazure_product(u, v)]) << in.name;
  }
}

}  // namespace
