#include <doctest.h>

#include <random>

#include "glq/classical.hpp"

using namespace glq;

namespace {

const CheckRecord& record(const VerificationReport& rep, const std::string& id) {
  for (const auto& r : rep.checks)
    if (r.id == id) return r;
  FAIL("missing record " << id);
  throw std::logic_error(id);
}

}  // namespace

TEST_SUITE("classical-positivity") {
  TEST_CASE("all parameters one at N = 2") {
    PositiveParam p(2);
    p.a.setOnes();
    p.b.setOnes();
    Eigen::MatrixXd want(2, 2);
    want << 1, 1, 1, 2;
    CHECK((lusztig_matrix(p) - want).norm() < 1e-15);
  }

  TEST_CASE("factor layout at N = 3") {
    PositiveParam p(3);
    p.a << 2, 3, 5;  // a_11, a_21, a_22
    const Eigen::MatrixXd up = upper_unipotent_classical(p);
    // (I + a11 E12 + a21 E23)(I + a22 E23)
    Eigen::MatrixXd want(3, 3);
    want << 1, 2, 10, 0, 1, 8, 0, 0, 1;
    CHECK((up - want).norm() < 1e-14);
    p.b << 7, 11, 13;  // b_11, b_21, b_22
    const Eigen::MatrixXd lo = lower_unipotent_classical(p);
    // factor 1: b_21 at (3,2); factor 2: b_11 at (2,1), b_22 at (3,2)
    Eigen::MatrixXd wl(3, 3);
    wl << 1, 0, 0, 7, 1, 0, 77, 24, 1;
    CHECK((lo - wl).norm() < 1e-12);
  }

  TEST_CASE("minors of the identity") {
    const auto x = initial_minors_classical(Eigen::MatrixXd::Identity(3, 3));
    for (const auto& [ij, v] : x) CHECK(v == (ij.first == ij.second ? 1.0 : 0.0));
    CHECK(x.size() == 9);
  }

  TEST_CASE("parameters from minors and from X coordinates") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 6; ++n)
      for (int t = 0; t < 20; ++t) {
        const auto p = random_param(n, rng);
        const Eigen::MatrixXd g = lusztig_matrix(p);
        const auto back = params_from_minors(initial_minors_classical(g), n);
        REQUIRE((back.flat() - p.flat()).cwiseQuotient(p.flat()).cwiseAbs().maxCoeff() < 1e-10);
        const auto via_x = params_from_x(x_coordinates(g), n);
        REQUIRE((via_x.flat() - p.flat()).cwiseQuotient(p.flat()).cwiseAbs().maxCoeff() < 1e-10);
      }
  }

  TEST_CASE("round trip, positivity, q = 1") {
    for (int n = 1; n <= 5; ++n) CHECK(round_trip_check(n, 100, 7).pass());
    for (int n = 1; n <= 6; ++n) CHECK(positivity_check(n, 1000, 7).pass());
    for (int n = 2; n <= 4; ++n) CHECK(q1_consistency_check(n, 10, 7).pass());
  }

  TEST_CASE("numeric jacobian of a polynomial map") {
    auto f = [](const Eigen::VectorXd& x) {
      Eigen::VectorXd y(2);
      y << x(0) * x(1), x(0) * x(0);
      return y;
    };
    Eigen::VectorXd x(2);
    x << 2, 3;
    Eigen::MatrixXd want(2, 2);
    want << 3, 2, 4, 0;
    CHECK((numeric_jacobian(f, x, 1e-6) - want).norm() < 1e-7);
  }

  TEST_CASE("Haar density at N = 1 is trivially constant") {
    CHECK(haar_density_check(1, 20, 3).pass());
  }

  TEST_CASE("Haar ratio carries the modular factor of the Borel") {
    // the published densities miss prod_{i<j} u_i / u_j: u_k enters with N + 1 - 2k
    for (int n = 2; n <= 4; ++n) {
      const auto rep = haar_density_check(n, 50, 11);
      CAPTURE(n);
      CHECK_FALSE(record(rep, "abu.ratio").pass);
      CHECK_FALSE(record(rep, "x.ratio").pass);
      const auto& abu = record(rep, "abu.fitted-correction");
      const auto& x = record(rep, "x.fitted-correction");
      CHECK(abu.pass);
      CHECK(x.pass);
      Json want_abu = Json::object(), want_x = Json::object();
      for (int k = 1; k <= n; ++k) {
        const int e = n + 1 - 2 * k;
        if (e == 0) continue;
        want_abu["u_" + std::to_string(k)] = e;
        want_x["X_{" + std::to_string(k) + "," + std::to_string(k) + "}"] = e;
      }
      CHECK(abu.data["exponents"] == want_abu);
      CHECK(x.data["exponents"] == want_x);
    }
    CHECK_THROWS_AS(haar_density_check(5, 10, 1), std::invalid_argument);
  }
}
