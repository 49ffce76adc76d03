#include <doctest.h>

#include "glq/relations.hpp"
#include "glq/cluster.hpp"

using namespace glq;

namespace {

Polynomial g(const LusztigChart& c, std::size_t i) { return c.gen(i); }

std::vector<int> range(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return r;
}

}  // namespace

TEST_SUITE("glq-matrix") {
  TEST_CASE("build_upper small cases") {
    const auto one = build_upper(1);
    CHECK(one.matrix.rows() == 1);
    CHECK(one.matrix.at(1, 1) == Polynomial::constant(one.chart.signature(), 1));

    const auto two = build_upper(2);
    const auto& c = two.chart;
    CHECK(two.matrix.at(1, 1) == c.one());
    CHECK(two.matrix.at(1, 2) == g(c, c.a(1, 1)));
    CHECK(two.matrix.at(2, 1).is_zero());
    CHECK(two.matrix.at(2, 2) == g(c, c.v(1)));

    const auto three = build_upper(3);
    CHECK(three.matrix.at(1, 3) == g(three.chart, three.chart.a(1, 1)) * g(three.chart, three.chart.a(2, 2)));
  }

  TEST_CASE("chart sizes") {
    for (int n = 1; n <= 6; ++n) {
      CHECK(LusztigChart::upper(n).generator_count() == static_cast<std::size_t>((n * n + n - 2) / 2));
      // a, v, b, u: twice the upper half
      CHECK(LusztigChart::full(n).generator_count() == static_cast<std::size_t>(n * n + n - 2));
    }
  }

  TEST_CASE("build_full small cases") {
    const auto two = build_full(2);
    const auto& c = two.chart;
    const auto u1 = g(c, c.u(1)), v1 = g(c, c.v(1)), a = g(c, c.a(1, 1)), b = g(c, c.b(1, 1));
    CHECK(two.matrix.at(1, 1) == u1);
    CHECK(two.matrix.at(1, 2) == u1 * a);
    CHECK(two.matrix.at(2, 1) == b * u1);
    CHECK(two.matrix.at(2, 2) == b * u1 * a + v1);

    const auto one = build_full(1);
    CHECK(one.matrix.rows() == 1);
    CHECK(one.chart.generator_count() == 0);
    CHECK(one.matrix.at(1, 1) == Polynomial::constant(one.chart.signature(), 1));
  }

  TEST_CASE("det_q of the full chart is the diagonal torus") {
    const auto two = build_full(2);
    const auto& c2 = two.chart;
    CHECK(quantum_determinant(two.matrix) == g(c2, c2.u(1)) * g(c2, c2.v(1)));

    const auto three = build_full(3);
    const auto& c = three.chart;
    const Polynomial det = quantum_determinant(three.matrix);
    REQUIRE(det.term_count() == 1);
    const auto& [mono, coeff] = *det.terms().begin();
    Monomial want = Monomial::unit(c.generator_count());
    for (auto i : {c.u(1), c.u(2), c.v(1), c.v(2)}) want.exponents[i] = 1;
    CHECK(mono == want);
    CHECK(coeff.at_one() == 1);
    // exact value: u_1 (u_2 v_1) v_2 in this order
    CHECK(det == g(c, c.u(1)) * g(c, c.u(2)) * g(c, c.v(1)) * g(c, c.v(2)));
  }

  TEST_CASE("entry_closed_form") {
    const auto three = build_upper(3);
    const auto& c = three.chart;
    CHECK(entry_closed_form(c, 1, 1) == c.one());
    CHECK(entry_closed_form(c, 2, 2) == g(c, c.v(1)));
    CHECK(entry_closed_form(c, 3, 3) == g(c, c.v(2)));
    CHECK(entry_closed_form(c, 2, 3) == g(c, c.v(1)) * (g(c, c.a(2, 1)) + g(c, c.a(2, 2))));
    CHECK(entry_closed_form(c, 3, 1).is_zero());
    const auto two = LusztigChart::upper(2);
    CHECK(entry_closed_form(two, 1, 2) == two.gen(two.a(1, 1)));
    CHECK_THROWS_AS(entry_closed_form(c, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(entry_closed_form(c, 1, 4), std::out_of_range);
    for (int n = 2; n <= 5; ++n) {
      const auto up = build_upper(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) REQUIRE(entry_closed_form(up.chart, i, j) == up.matrix.at(i, j));
    }
  }

  TEST_CASE("GL_q(2) relations") {
    CHECK(verify_glq2_relations(build_upper(3).matrix).pass());
    CHECK(verify_glq2_relations(build_full(2).matrix).pass());

    // commutative specialization breaks z11 z21 = q^2 z21 z11
    const auto two = build_full(2);
    const auto flat = two.matrix.with_signature(commutative_copy(*two.chart.signature()));
    const auto rep = verify_glq2_relations(flat);
    CHECK_FALSE(rep.pass());
    const auto residual = glq2_residual(flat.at(1, 1), flat.at(1, 2), flat.at(2, 1), flat.at(2, 2), 3);
    const auto z21z11 = flat.at(2, 1) * flat.at(1, 1);
    CHECK(residual == z21z11.scaled(LaurentScalar(1) - LaurentScalar::q_power(2)));
    bool found = false;
    for (const auto& r : rep.checks)
      if (r.id == "minor(1,2;1,2).z3") found = !r.pass;
    CHECK(found);
  }

  TEST_CASE("quantum determinant") {
    const auto three = build_upper(3);
    const auto& c = three.chart;
    const auto x23 = quantum_determinant(three.matrix, {1, 2}, {2, 3});
    CHECK(x23 == cluster_monomial(c, 2, 3));
    REQUIRE(x23.term_count() == 1);
    Monomial want = Monomial::unit(c.generator_count());
    for (auto i : {c.a(1, 1), c.a(2, 1), c.v(1)}) want.exponents[i] = 1;
    CHECK(x23.terms().begin()->first == want);

    const auto id = OperatorMatrix::identity(c.signature(), 3);
    CHECK(quantum_determinant(id) == c.one());
    CHECK_THROWS_AS(quantum_determinant(three.matrix, {1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(quantum_determinant(three.matrix, {1, 1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(quantum_determinant(three.matrix, {1, 4}, {1, 2}), std::invalid_argument);
  }

  TEST_CASE("row order independence") {
    const auto three = build_upper(3);
    CHECK(verify_row_order_independence(three.matrix, {1, 2}, {2, 3}).pass());
    CHECK(verify_row_order_independence(three.matrix, {2}, {3}).pass());
    CHECK(verify_row_order_independence(build_full(3).matrix, range(3), range(3)).pass());
  }

  TEST_CASE("full chart relations and coproduct") {
    for (int n = 2; n <= 4; ++n) CHECK(verify_glq2_relations(build_full(n).matrix).pass());
    CHECK(coproduct_stability_check(2).pass());
    CHECK(coproduct_stability_check(3).pass());
    CHECK_THROWS_AS(coproduct_stability_check(5, 4), std::invalid_argument);
  }

  TEST_CASE("lower half carries the inverted relations") {
    // {b, u} obey the {a, v} pattern with q -> q^{-1}; the {a, v} pattern itself fails
    const auto full = LusztigChart::full(3);
    const auto& c = full.signature()->commutation();
    const auto h = static_cast<Eigen::Index>(LusztigChart::upper_size(3));
    CHECK(c.bottomRightCorner(h, h) == -c.topLeftCorner(h, h));
    CHECK(c.topRightCorner(h, h).isZero());

    IntMatrix mirrored = c;
    mirrored.bottomRightCorner(h, h) = c.topLeftCorner(h, h);
    const auto probe = full.with_commutation(mirrored);
    const auto z = lower_unipotent(probe) * full_torus(probe) * upper_unipotent(probe);
    CHECK_FALSE(verify_glq2_relations(z).pass());
  }
}
