#include <catch2/catch_amalgamated.hpp>

#include <dgklrw/polaction.hpp>

#include "test_util.hpp"

using namespace dgklrw;

namespace {
const std::vector<Weight> MU_G{Weight::shifted_generic(0)};

PolElement x_power(const Composition& label, std::vector<int> exps, std::uint32_t mask = 0) {
  PolElement p(label, comp_size(label));
  p.add(PolKey{mask, std::move(exps)}, DeltaPoly(1));
  return p;
}
}  // namespace

TEST_CASE("sigma swaps variables and twists the exterior part") {
  Composition rho{2};
  PolElement x1 = x_power(rho, {1, 0});
  REQUIRE(sigma(1, x1) == x_power(rho, {0, 1}));

  PolElement w1 = x_power(rho, {0, 0}, 1u);
  PolElement img = sigma(1, w1);
  PolElement expected = w1;
  expected.add(PolKey{2u, {1, 0}}, DeltaPoly(1));
  expected.add(PolKey{2u, {0, 1}}, DeltaPoly(-1));
  REQUIRE(img == expected);
  REQUIRE(sigma(1, img) == w1);
}

TEST_CASE("sigma is an involution satisfying the braid relation") {
  std::mt19937 rng(4);
  Composition rho{3};
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<std::uint32_t> maskd(0, 7);
  for (int i = 0; i < 60; ++i) {
    PolElement p = x_power(rho, {expd(rng), expd(rng), expd(rng)}, maskd(rng));
    REQUIRE(sigma(1, sigma(1, p)) == p);
    REQUIRE(sigma(2, sigma(2, p)) == p);
    REQUIRE(sigma(1, sigma(2, sigma(1, p))) == sigma(2, sigma(1, sigma(2, p))));
  }
}

TEST_CASE("divided differences on small inputs") {
  Composition rho{2};
  REQUIRE(demazure(1, PolElement::unit(rho)).is_zero());
  REQUIRE(demazure(1, x_power(rho, {1, 0})) == PolElement::unit(rho));
  PolElement w1 = x_power(rho, {0, 0}, 1u);
  PolElement expected(rho, 2);
  expected.add(PolKey{2u, {0, 0}}, DeltaPoly(-1));
  REQUIRE(demazure(1, w1) == expected);
}

TEST_CASE("generator actions match the defining table") {
  std::vector<Weight> mu{Weight::shifted_generic(0), Weight::integral(2)};
  Composition rho{1, 0};
  PolElement u = PolElement::unit(rho);
  // Dot multiplies by the strand variable.
  Monomial d(mu, rho, {dot_site(1)});
  REQUIRE(act(d, u) == x_power(rho, {1}));
  // Nail multiplies by the first exterior generator.
  Monomial nl(mu, rho, {nail_site()});
  REQUIRE(act(nl, u) == x_power(rho, {0}, 1u));
  // Black strand heading right over a colored strand acts trivially.
  Monomial right(mu, rho, {mixed_site(1)});
  REQUIRE(act(right, u) == PolElement::unit(Composition{0, 1}));
  // Black strand heading left over a red strand multiplies by x_i^N.
  Monomial left(mu, {0, 1}, {mixed_site(1)});
  REQUIRE(act(left, PolElement::unit(Composition{0, 1})) == x_power(rho, {2}));
  // Over a blue strand the leftward crossing is the parameter.
  std::vector<Weight> mub{Weight::shifted_generic(0), Weight::shifted_generic(-1)};
  Monomial leftb(mub, {0, 1}, {mixed_site(1)});
  REQUIRE(act(leftb, PolElement::unit(Composition{0, 1})) ==
          PolElement::unit(rho).scaled(DeltaPoly::delta()));
}

TEST_CASE("action vanishes on mismatched labels") {
  Monomial d(MU_G, {1}, {dot_site(1)});
  PolElement wrong = PolElement::unit(Composition{1});
  // Same composition but different weight string width would not type-check;
  // use a mismatching composition on two strands instead.
  std::vector<Weight> mu{Weight::shifted_generic(0), Weight::integral(1)};
  Monomial d2(mu, {1, 0}, {dot_site(1)});
  REQUIRE(act(d2, PolElement::unit(Composition{0, 1})).is_zero());
  REQUIRE(!act(d2, PolElement::unit(Composition{1, 0})).is_zero());
  (void)wrong;
}

TEST_CASE("the action is a representation on random composable pairs") {
  std::mt19937 rng(123);
  for (const auto& mu : testing::test_weight_strings()) {
    for (const auto& rho : all_compositions(2, static_cast<int>(mu.size()))) {
      auto vectors = test_vectors(rho, 2);
      for (int i = 0; i < 15; ++i) {
        Monomial a = testing::random_monomial(rng, mu, rho, 4);
        Monomial b = testing::random_monomial(rng, mu, a.top(), 4);
        auto ba = compose(b, a);
        REQUIRE(ba);
        for (const auto& v : vectors) {
          REQUIRE(act(*ba, v) == act(b, act(a, v)));
        }
      }
    }
  }
}

TEST_CASE("every rewrite rule is compatible with the action") {
  for (const auto& mu : testing::test_weight_strings()) {
    int r = static_cast<int>(mu.size());
    int b = r == 1 ? 3 : 2;
    RelationReport rep = verify_relations(mu, b, 3);
    INFO((rep.witnesses.empty() ? std::string() : rep.witnesses.front()));
    REQUIRE(rep.instances > 0);
    REQUIRE(rep.ok());
  }
}

TEST_CASE("normal forms act identically to their sources") {
  std::mt19937 rng(321);
  for (const auto& mu : testing::test_weight_strings()) {
    for (const auto& rho : all_compositions(2, static_cast<int>(mu.size()))) {
      auto vectors = test_vectors(rho, 2);
      Rewriter rw;
      for (int i = 0; i < 12; ++i) {
        Monomial m = testing::random_monomial(rng, mu, rho, 5);
        Element nf = rw.normal_form(m);
        for (const auto& v : vectors) REQUIRE(act(Element(m), v) == act(nf, v));
      }
    }
  }
}

TEST_CASE("rank of the one-strand basis family is four") {
  Composition rho{1};
  Monomial one = idempotent(MU_G, rho);
  Monomial x(MU_G, rho, {dot_site(1)});
  Monomial th = theta(1, rho, MU_G);
  Monomial thx = theta(1, rho, MU_G, 1);
  std::vector<Element> fam{Element(one), Element(x), Element(th), Element(thx)};
  auto vectors = test_vectors(rho, 1);
  REQUIRE(independence_rank(fam, vectors) == 4);
  // Appending the zero operator theta^2 leaves the rank unchanged.
  fam.push_back(normal_form(compose(Element(th), Element(th))));
  REQUIRE(independence_rank(fam, vectors) == 4);
  // The trivial family.
  REQUIRE(independence_rank({Element(one)}, test_vectors(rho, 0)) == 1);
}

TEST_CASE("at the degenerate parameter the leftward blue crossing kills the action") {
  std::vector<Weight> mu{Weight::shifted_generic(0), Weight::shifted_generic(0)};
  Monomial leftb(mu, {0, 1}, {mixed_site(1)});
  PolElement u = PolElement::unit(Composition{0, 1});
  REQUIRE(act(leftb, u).at_zero().is_zero());
  // Yet the element itself is a nonzero normal form of the specialized
  // algebra.
  RewriteOptions zero;
  zero.mode = DeltaMode::Zero;
  REQUIRE(normal_form(Element(leftb), zero) == Element(leftb));
}
