#include <catch2/catch_amalgamated.hpp>

#include <dgklrw/diagram.hpp>

#include "test_util.hpp"

using namespace dgklrw;

namespace {
const std::vector<Weight> MU_G{Weight::shifted_generic(0)};
const std::vector<Weight> MU_GI{Weight::shifted_generic(0), Weight::integral(2)};
}  // namespace

TEST_CASE("idempotent validates") {
  Monomial m = idempotent(MU_GI, {1, 1});
  REQUIRE(!validate_monomial(m));
  REQUIRE(m.top() == Composition{1, 1});
}

TEST_CASE("black leftmost strand is rejected") {
  auto d = validate_sequence(MU_G, {0, 1}, {});
  REQUIRE(d);
  REQUIRE(d->message == "leftmost strand not colored");
}

TEST_CASE("colored strands cannot cross") {
  // Sequence (mu1, mu2) with a transposition site on the two colored strands.
  auto d = validate_sequence(MU_GI, {1, 2}, {mixed_site(0)});
  REQUIRE(d);
  REQUIRE(d->message == "colored strands cannot cross");
  auto d2 = validate_sequence(MU_GI, {1, 2, 0}, {mixed_site(1), black_site(1)});
  REQUIRE(d2);
  REQUIRE(d2->message == "black crossing touching a colored strand");
  REQUIRE(d2->height == 1);
}

TEST_CASE("crossing that would put a black strand leftmost is rejected") {
  auto d = validate_sequence(MU_G, {1, 0}, {mixed_site(0)});
  REQUIRE(d);
  REQUIRE(d->message == "leftmost strand not colored");
}

TEST_CASE("composition of idempotents") {
  Monomial e = idempotent(MU_GI, {1, 1});
  auto p = compose(e, e);
  REQUIRE(p);
  REQUIRE(*p == e);
  Monomial f = idempotent(MU_GI, {0, 2});
  REQUIRE(!compose(e, f));
}

TEST_CASE("stacking dots composes") {
  Monomial d1(MU_G, {1}, {dot_site(1)});
  auto p = compose(d1, d1);
  REQUIRE(p);
  REQUIRE(p->stack().size() == 2);
  REQUIRE(degree(*p) == GradingVector{0, 4, 0});
}

TEST_CASE("generator degrees") {
  REQUIRE(degree(Monomial(MU_G, {1}, {dot_site(1)})) == GradingVector{0, 2, 0});
  REQUIRE(degree(Monomial(MU_G, {2}, {black_site(1)})) == GradingVector{0, -2, 0});
  std::vector<Weight> mu{Weight::shifted_generic(1)};
  REQUIRE(degree(Monomial(mu, {1}, {nail_site()})) == GradingVector{1, 2, 2});
}

TEST_CASE("degree is additive under composition") {
  std::mt19937 rng(7);
  for (const auto& mu : testing::test_weight_strings()) {
    for (const auto& rho : all_compositions(2, static_cast<int>(mu.size()))) {
      for (int i = 0; i < 40; ++i) {
        Monomial a = testing::random_monomial(rng, mu, rho, 4);
        Monomial b = testing::random_monomial(rng, mu, a.top(), 4);
        auto p = compose(b, a);
        REQUIRE(p);
        REQUIRE(degree(*p) == degree(a) + degree(b));
      }
    }
  }
}

TEST_CASE("canonical form merges distant exchanges") {
  // Two dots on distant strands, entered in either height order.
  Monomial a(MU_GI, {2, 1}, {dot_site(1), dot_site(4)});
  Monomial b(MU_GI, {2, 1}, {dot_site(4), dot_site(1)});
  REQUIRE(a == b);
}

TEST_CASE("canonical form emits an independent left dot before a crossing") {
  // Crossing stacked above a dot on a strictly-left strand.
  Monomial a(MU_GI, {2, 2}, {black_site(4), dot_site(1)});
  REQUIRE(a.stack()[0] == dot_site(1));
  REQUIRE(a.stack()[1] == black_site(4));
}

TEST_CASE("canonical form keeps dependent sites ordered") {
  // A dot feeding directly into a crossing above it.
  Monomial a(MU_G, {2}, {dot_site(1), black_site(1)});
  REQUIRE(a.stack()[0] == dot_site(1));
  Monomial b(MU_G, {2}, {black_site(1), dot_site(1)});
  REQUIRE(b.stack()[0] == black_site(1));
}

TEST_CASE("canonical form is constant on isotopy classes") {
  std::mt19937 rng(99);
  for (const auto& mu : testing::test_weight_strings()) {
    Composition rho(static_cast<int>(mu.size()), 0);
    rho[0] = 2;
    if (!respects_caps(rho, mu)) continue;
    for (int i = 0; i < 60; ++i) {
      Monomial m = testing::random_monomial(rng, mu, rho, 6);
      // Apply random admissible distant exchanges to the raw stack and
      // re-canonicalize.
      auto stack = m.stack();
      for (int swp = 0; swp < 20 && stack.size() >= 2; ++swp) {
        std::uniform_int_distribution<std::size_t> pick(0, stack.size() - 2);
        std::size_t j = pick(rng);
        if (!stack[j].overlaps(stack[j + 1])) std::swap(stack[j], stack[j + 1]);
      }
      Monomial shuffled(mu, rho, stack);
      REQUIRE(shuffled == m);
      // Idempotence.
      Monomial again(mu, m.bottom(), m.stack());
      REQUIRE(again == m);
    }
  }
}

TEST_CASE("tightened nail shapes and degrees") {
  std::vector<Weight> mu{Weight::shifted_generic(0)};
  Monomial t1 = theta(1, {1}, mu, 0);
  REQUIRE(t1.stack().size() == 1);
  REQUIRE(t1.stack()[0] == nail_site());
  REQUIRE(degree(t1) == GradingVector{1, 0, 2});

  Monomial t2 = theta(2, {2}, mu, 0);
  REQUIRE(degree(t2) == GradingVector{1, -4, 2});

  Monomial t1p = theta(1, {1}, mu, 1);
  REQUIRE(degree(t1p) == GradingVector{1, 2, 2});
}

TEST_CASE("tightened nail degree matches the closed formula") {
  std::vector<Weight> mu{Weight::shifted_generic(0), Weight::integral(2)};
  for (const auto& rho : all_compositions(3, 2)) {
    if (!respects_caps(rho, mu)) continue;
    int b = comp_size(rho);
    for (int k = 1; k <= b; ++k) {
      Monomial t = theta(k, rho, mu);
      // Strand k lies in block i; expected q-degree 2(mu_1+...+mu_i)-4(k-1).
      int i = 0, acc = 0;
      for (std::size_t j = 0; j < rho.size(); ++j) {
        acc += rho[j];
        if (k <= acc) { i = static_cast<int>(j); break; }
      }
      GradingVector expected{1, -4 * (k - 1), 0};
      for (int j = 0; j <= i; ++j) {
        GradingVector w = mu[j].q_power();
        expected.q += 2 * w.q;
        expected.l += 2 * w.l;
      }
      REQUIRE(degree(t) == expected);
    }
  }
}

TEST_CASE("flip basics") {
  Monomial e = idempotent(MU_GI, {1, 1});
  REQUIRE(flip(e) == e);
  Monomial dc(MU_G, {2}, {dot_site(1), black_site(1)});
  Monomial expected(MU_G, {2}, {black_site(1), dot_site(1)});
  REQUIRE(flip(dc) == expected);
}

TEST_CASE("flip is an involution on random monomials") {
  std::mt19937 rng(5);
  int count = 0;
  for (const auto& mu : testing::test_weight_strings()) {
    for (const auto& rho : all_compositions(3, static_cast<int>(mu.size()))) {
      if (!respects_caps(rho, mu)) continue;
      for (int i = 0; i < 10; ++i) {
        Monomial m = testing::random_monomial(rng, mu, rho, 6);
        REQUIRE(flip(flip(m)) == m);
        ++count;
      }
    }
  }
  REQUIRE(count >= 100);
}

TEST_CASE("flip is an anti-involution for composition") {
  std::mt19937 rng(11);
  for (const auto& mu : testing::test_weight_strings()) {
    for (const auto& rho : all_compositions(2, static_cast<int>(mu.size()))) {
      for (int i = 0; i < 30; ++i) {
        Monomial a = testing::random_monomial(rng, mu, rho, 4);
        Monomial b = testing::random_monomial(rng, mu, a.top(), 4);
        auto ba = compose(b, a);
        REQUIRE(ba);
        auto fafb = compose(flip(a), flip(b));
        REQUIRE(fafb);
        REQUIRE(flip(*ba) == *fafb);
      }
    }
  }
}

TEST_CASE("element arithmetic drops zero coefficients") {
  Monomial e = idempotent(MU_G, {1});
  Element x(e, DeltaPoly(1));
  Element y(e, DeltaPoly(-1));
  REQUIRE((x + y).is_zero());
  Element z = DeltaPoly::delta() * x;
  REQUIRE(z.term_count() == 1);
  REQUIRE(z.terms().begin()->second == DeltaPoly::delta());
}

TEST_CASE("element composition vanishes across mismatched boundaries") {
  Element a(idempotent(MU_GI, {1, 1}));
  Element b(idempotent(MU_GI, {0, 2}));
  REQUIRE(compose(a, b).is_zero());
  REQUIRE(compose(a, a) == a);
}
