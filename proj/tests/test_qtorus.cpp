#include <doctest.h>

#include <random>

#include "glq/cluster.hpp"
#include "glq/serialize.hpp"
#include "glq/tori.hpp"
#include "helpers.hpp"

using namespace glq;

namespace {

SignaturePtr weyl_pair() {
  IntMatrix c(2, 2);
  c << 0, 1, -1, 0;
  return make_algebra({"u", "v"}, c);
}

}  // namespace

TEST_SUITE("qtorus-core") {
  TEST_CASE("make_algebra validates") {
    auto w = weyl_pair();
    CHECK(w->size() == 2);
    CHECK(w->pairing(0, 1) == 1);

    IntMatrix one = IntMatrix::Zero(1, 1);
    CHECK(make_algebra({"x"}, one)->size() == 1);

    IntMatrix bad(2, 2);
    bad << 0, 1, 1, 0;
    CHECK_THROWS_AS(make_algebra({"u", "v"}, bad), std::invalid_argument);
    CHECK_THROWS_AS(make_algebra({"u"}, IntMatrix::Zero(2, 2)), std::invalid_argument);
    IntMatrix diag(1, 1);
    diag << 1;
    CHECK_THROWS_AS(make_algebra({"x"}, diag), std::invalid_argument);
  }

  TEST_CASE("upper chart signature for N = 3") {
    const auto chart = LusztigChart::upper(3);
    const auto& sig = *chart.signature();
    CHECK(sig.size() == 5);
    const auto& c = sig.commutation();
    CHECK(c == -c.transpose());
    // a_{mn} v_m = q^2 v_m a_{mn}
    CHECK(sig.pairing(chart.a(1, 1), chart.v(1)) == 1);
    CHECK(sig.pairing(chart.a(2, 1), chart.v(2)) == 1);
    CHECK(sig.pairing(chart.a(2, 2), chart.v(2)) == 1);
    // same row, later column first
    CHECK(sig.pairing(chart.a(2, 2), chart.a(2, 1)) == 1);
    // a_{2n} a_{1n'} = q^2 a_{1n'} a_{2n} for n <= n'
    CHECK(sig.pairing(chart.a(2, 1), chart.a(1, 1)) == 1);
    CHECK(sig.pairing(chart.a(2, 2), chart.a(1, 1)) == 0);
    CHECK(sig.pairing(chart.a(1, 1), chart.v(2)) == 0);
    CHECK(sig.pairing(chart.a(2, 1), chart.v(1)) == 0);
  }

  TEST_CASE("normal_mul on a Weyl pair") {
    auto w = weyl_pair();
    const auto u = Polynomial::generator(w, "u"), v = Polynomial::generator(w, "v");
    const auto uv = u * v;
    CHECK(v * u == uv.scaled(LaurentScalar::q_power(-2)));
    const auto one = Polynomial::constant(w, 1);
    CHECK(uv * one == uv);
    CHECK(one * uv == uv);

    const auto s = u + v;
    Polynomial want = u * u + v * v;
    want += uv.scaled(LaurentScalar(1) + LaurentScalar::q_power(-2));
    CHECK(s * s == want);
    CHECK_THROWS_AS(normal_mul(u, Polynomial::generator(LusztigChart::upper(2).signature(), 0)), std::invalid_argument);
  }

  TEST_CASE("q_commutation_exponent") {
    auto w = weyl_pair();
    const auto u = Polynomial::generator(w, "u"), v = Polynomial::generator(w, "v");
    CHECK(q_commutation_exponent(u, v) == 1);
    CHECK(q_commutation_exponent(v, u) == -1);
    CHECK(q_commutation_exponent(u * v, u * v) == 0);
    CHECK_FALSE(q_commutation_exponent(u + v, u).has_value());

    const auto chart = LusztigChart::upper(3);
    CHECK(q_commutation_exponent(initial_minor(chart, 1, 3), initial_minor(chart, 2, 3)) == 1);
  }

  TEST_CASE("check_morphism") {
    const auto chart = LusztigChart::upper(3);
    CHECK(check_morphism(Morphism::identity(chart.signature())).pass());
    CHECK(check_morphism(thm61_embedding(3)).pass());

    auto w = weyl_pair();
    const Morphism swapped(w, w, {ScaledMonomial{0, Monomial::generator(2, 1)}, ScaledMonomial{0, Monomial::generator(2, 0)}});
    const auto rep = check_morphism(swapped);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].observed == -1);
    CHECK(rep.violations[0].expected == 1);
  }

  TEST_CASE("apply_morphism") {
    const auto f = thm61_embedding(3);
    const auto chart = LusztigChart::upper(3);
    const auto& t = *f.target();
    const auto a11 = apply_morphism(chart.gen(chart.a(1, 1)), f);
    CHECK(a11 == Polynomial::from(f.target(), ordered_product(t, {{"u_1", 1}, {"u_{1,1}", 1}})));
    const auto q3 = Polynomial::constant(chart.signature(), LaurentScalar::q_power(3));
    CHECK(apply_morphism(q3, f) == Polynomial::constant(f.target(), LaurentScalar::q_power(3)));

    const auto z13 = build_upper(3).matrix.at(1, 3);
    CHECK(z13 == chart.gen(chart.a(1, 1)) * chart.gen(chart.a(2, 2)));
    CHECK(apply_morphism(z13, f) == apply_morphism(chart.gen(chart.a(1, 1)), f) * apply_morphism(chart.gen(chart.a(2, 2)), f));
  }

  TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(11);
    for (int size : {1, 2, 3, 5, 8, 12}) {
      const auto sig = testing::random_signature(rng, size);
      for (int t = 0; t < 1000; ++t) {
        const auto a = testing::random_polynomial(rng, sig, 2);
        const auto b = testing::random_polynomial(rng, sig, 2);
        const auto c = testing::random_polynomial(rng, sig, 2);
        REQUIRE((a * b) * c == a * (b * c));
      }
    }
  }

  TEST_CASE("antisymmetry and bilinearity of the exponent") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; ++t) {
      const int size = 1 + t % 12;
      const auto sig = testing::random_signature(rng, size);
      const auto e = testing::random_monomial(rng, sig->size());
      const auto f = testing::random_monomial(rng, sig->size());
      // oracle: build the monomials as ordered products of generators and
      // expand the pairing generator by generator
      auto build = [&](const Monomial& m) {
        Polynomial p = Polynomial::constant(sig, 1);
        for (std::size_t i = 0; i < m.size(); ++i) {
          const Polynomial g = Polynomial::term(sig, Monomial::generator(sig->size(), i, m.exponents[i] > 0 ? 1 : -1));
          for (int k = 0; k < std::abs(m.exponents[i]); ++k) p = p * g;
        }
        return p;
      };
      long long expected = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
          expected += static_cast<long long>(e.exponents[i]) * f.exponents[j] * sig->pairing(i, j);
      const auto pe = build(e), pf = build(f);
      REQUIRE(q_commutation_exponent(pe, pf) == expected);
      REQUIRE(q_commutation_exponent(pf, pe) == -expected);
      CHECK(commutation_pairing(*sig, e, f) == expected);
    }
  }

  TEST_CASE("normal form does not depend on association order") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
      const auto sig = testing::random_signature(rng, 6);
      std::vector<Polynomial> fs;
      for (int k = 0; k < 5; ++k) fs.push_back(testing::random_polynomial(rng, sig, 2));
      Polynomial left = fs[0];
      for (std::size_t k = 1; k < fs.size(); ++k) left = left * fs[k];
      Polynomial right = fs.back();
      for (std::size_t k = fs.size() - 1; k-- > 0;) right = fs[k] * right;
      const Polynomial middle = (fs[0] * fs[1]) * ((fs[2] * fs[3]) * fs[4]);
      REQUIRE(left == right);
      REQUIRE(left == middle);
    }
  }

  TEST_CASE("apply_morphism is multiplicative on random polynomials") {
    std::mt19937_64 rng(14);
    const auto f = thm61_embedding(4);
    for (int t = 0; t < 200; ++t) {
      const auto p = testing::random_polynomial(rng, f.source(), 2);
      const auto r = testing::random_polynomial(rng, f.source(), 2);
      REQUIRE(apply_morphism(p * r, f) == apply_morphism(p, f) * apply_morphism(r, f));
    }
  }

  TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 50; ++t) {
      const auto sig = testing::random_signature(rng, 1 + t % 7);
      const auto p = testing::random_polynomial(rng, sig, 4);
      const auto sig2 = signature_from_json(to_json(*sig));
      CHECK(*sig2 == *sig);
      const auto p2 = polynomial_from_json(to_json(p));
      CHECK(p2.with_signature(sig) == p);
      CHECK(to_json(p2).dump() == to_json(p).dump());
    }
    const auto f = thm61_embedding(3);
    const auto g = morphism_from_json(to_json(f));
    CHECK(to_json(g).dump() == to_json(f).dump());
    CHECK(check_morphism(g).pass());
  }

  TEST_CASE("Laurent scalars") {
    const LaurentScalar a = LaurentScalar(1) + LaurentScalar::q_power(-2);
    CHECK(a * LaurentScalar(0) == LaurentScalar());
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2) == LaurentScalar::q_power(2) + LaurentScalar(1));
    CHECK(LaurentScalar::q_power(3, 5).as_term() == std::make_pair(3, BigInt(5)));
    CHECK(a.at_one() == 2);
  }
}
