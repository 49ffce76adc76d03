#include <doctest.h>

#include <fstream>
#include <random>
#include <regex>

#include "glq/tori.hpp"

using namespace glq;

namespace {

Json golden(const std::string& name) {
  std::ifstream f(std::string(GLQ_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  return Json::parse(f);
}

ScaledMonomial product(const AlgebraSignature& t, std::vector<std::pair<std::string, int>> f) { return ordered_product(t, f); }

}  // namespace

TEST_SUITE("tori-embed") {
  TEST_CASE("torus signatures") {
    const auto t = make_tori_signature({{"u", "v"}, {"x", "y"}}, {1, -1}, {"z"});
    CHECK(t->size() == 5);
    CHECK(t->pairing(0, 1) == 1);
    CHECK(t->pairing(2, 3) == -1);
    CHECK(t->pairing(0, 2) == 0);
    CHECK(t->commutation().row(4).isZero());
  }

  TEST_CASE("explicit embedding of the upper chart") {
    const auto f = thm61_embedding(3);
    const auto& t = *f.target();
    CHECK(f.image("a_{1,1}") == product(t, {{"u_1", 1}, {"u_{1,1}", 1}}));
    CHECK(f.image("a_{2,1}") == product(t, {{"u_2", 1}, {"v_{1,1}", 1}, {"u_{2,1}", 1}}));
    // u_{N-1,N-1} := 1
    CHECK(f.image("a_{2,2}") == product(t, {{"u_2", 1}, {"v_{2,1}", 1}}));
    // frozen convention inverts the diagonal images
    CHECK(f.image("v_1") == product(t, {{"v_1", -1}}));
    CHECK(thm61_embedding(3, {1, false}).image("v_2") == product(t, {{"v_2", 1}}));
    for (int n = 2; n <= 8; ++n) {
      const auto g = thm61_embedding(n);
      CHECK(g.target()->size() == static_cast<std::size_t>(n * n + n - 4));
      if (n <= 6) CHECK(check_morphism(g).pass());
    }
    CHECK_THROWS_AS(thm61_embedding(1), std::invalid_argument);
  }

  TEST_CASE("a single orientation fails the explicit embedding") {
    // the diagonal relation and the a-a relations pull the orientation apart
    const auto sweep = sweep_conventions([](const Convention& c) { return thm61_embedding(4, c); });
    int passing = 0;
    for (const auto& s : sweep) passing += s.report.pass();
    CHECK(passing == 1);
    CHECK_FALSE(check_morphism(thm61_embedding(3, {1, false})).pass());
  }

  TEST_CASE("both halves") {
    const auto f = full_embedding(3);
    const auto& t = *f.target();
    CHECK(f.image("b_{1,1}") == product(t, {{"v'_1", 1}, {"u'_{1,1}", 1}}));
    CHECK(f.image("u_1") == product(t, {{"u'_1", 1}}));
    for (int n = 2; n <= 6; ++n) CHECK(check_morphism(full_embedding(n)).pass());
    // disjoint supports: every (a, b) pair commutes in the target
    const auto chart = LusztigChart::full(3);
    for (std::size_t i = 0; i < LusztigChart::upper_size(3); ++i)
      for (std::size_t j = LusztigChart::upper_size(3); j < chart.generator_count(); ++j)
        CHECK(commutation_pairing(t, f.image(i).monomial, f.image(j).monomial) == 0);
  }

  TEST_CASE("reduced embedding") {
    for (int n = 2; n <= 6; ++n) {
      const auto f = reduced_embedding(n);
      CHECK(f.target()->size() == static_cast<std::size_t>(2 * (n * n - 2)));
      CHECK(check_morphism(f).pass());
    }
    CHECK(reduced_embedding(2).target()->size() == 4);
    // composing with the merged chart leaves the full relations intact
    const auto merged = merged_chart(3);
    CHECK(check_morphism(merged.into_full).pass());
  }

  TEST_CASE("commutation rank") {
    for (int n = 2; n <= 8; ++n) {
      const auto r = commutation_rank(*LusztigChart::upper(n).signature());
      CHECK(r.minimal_tori == n * n / 4);
      CHECK(r.rank == 2 * (n * n / 4));
    }
    for (int n = 2; n <= 6; ++n) CHECK(commutation_rank(*LusztigChart::full(n).signature()).minimal_tori == n * n / 2);
    const auto single = make_algebra({"x"}, IntMatrix::Zero(1, 1));
    CHECK(commutation_rank(*single).rank == 0);
    CHECK(commutation_rank(*single).kernel_dim == 1);
  }

  TEST_CASE("symplectic reduction") {
    IntMatrix w(2, 2);
    w << 0, 1, -1, 0;
    const auto r = symplectic_reduce(w);
    CHECK(r.s == IntMatrix::Identity(2, 2));
    CHECK(r.divisors == std::vector<long long>{1});

    const auto r2 = symplectic_reduce(2 * w);
    CHECK(r2.divisors == std::vector<long long>{2});
    CHECK_FALSE(r2.all_unit());

    const auto three = symplectic_reduce(LusztigChart::upper(3).signature()->commutation());
    CHECK(three.divisors == std::vector<long long>{1, 1});
    CHECK(three.kernel_dim() == 1);

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> e(-3, 3), sz(1, 9);
    for (int t = 0; t < 300; ++t) {
      const int n = sz(rng);
      IntMatrix c = IntMatrix::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          c(i, j) = e(rng);
          c(j, i) = -c(i, j);
        }
      const auto red = symplectic_reduce(c);
      REQUIRE(verify_reduction(c, red));
      CHECK(static_cast<int>(2 * red.pairs()) == rational_rank(c));
      for (std::size_t k = 1; k < red.divisors.size(); ++k) CHECK(red.divisors[k] % red.divisors[k - 1] == 0);
    }
    for (int n = 2; n <= 8; ++n) {
      const IntMatrix c = LusztigChart::upper(n).signature()->commutation();
      const auto red = symplectic_reduce(c);
      CHECK(verify_reduction(c, red));
      CHECK(red.all_unit());
    }
  }

  TEST_CASE("minimal embedding") {
    const auto two = minimal_embedding(LusztigChart::upper(2).signature());
    CHECK(two.target()->size() == 2);
    CHECK(check_morphism(two).pass());
    const auto four = minimal_embedding(LusztigChart::upper(4).signature());
    CHECK(check_morphism(four).pass());
    int pairs = 0;
    for (Eigen::Index i = 0; i + 1 < four.target()->commutation().rows(); i += 2) pairs += four.target()->pairing(i, i + 1) != 0;
    CHECK(pairs == 4);

    const auto flat = make_algebra({"x", "y"}, IntMatrix::Zero(2, 2));
    const auto m = minimal_embedding(flat);
    CHECK(m.target()->commutation().isZero());
    CHECK(check_morphism(m).pass());

    IntMatrix w(2, 2);
    w << 0, 2, -2, 0;
    CHECK_THROWS_AS(minimal_embedding(make_algebra({"x", "y"}, w)), std::domain_error);
  }

  TEST_CASE("published nine-torus table") {
    const Json g = golden("example64_table.json")["images"];
    const auto& entries = example64_entries();
    REQUIRE(entries.size() == g.size());
    const std::regex letter("[UV]_[0-9]");
    const auto f = example64_table(6);
    const auto& t = *f.target();
    for (const auto& e : entries) {
      // "a_{2,2}" is printed as "a_{22}"
      std::string key = e.generator;
      key.erase(std::remove(key.begin(), key.end(), ','), key.end());
      std::string printed = e.printed();
      printed.erase(std::remove(printed.begin(), printed.end(), '*'), printed.end());
      REQUIRE(g.contains(key));
      CHECK(printed == g[key].get<std::string>());

      // the morphism carries exactly the printed word, letters read off the golden string
      const std::string text = g[key];
      std::vector<std::pair<std::string, int>> word;
      for (auto it = std::sregex_iterator(text.begin(), text.end(), letter); it != std::sregex_iterator(); ++it)
        word.push_back({it->str(), 1});
      ScaledMonomial want = ordered_product(t, word);
      want.q_power += text[0] == 'q' ? 1 : 0;
      const std::string source = key[0] == 'u' ? "v_" + key.substr(2) : e.generator;
      if (key[0] == 'u') want = inverse(t, want);  // frozen convention inverts the diagonal
      CHECK(f.image(source) == want);
    }
    CHECK(f.image("a_{2,2}").q_power == product(t, {{"V_2", 1}, {"U_2", 1}, {"U_3", 1}}).q_power + 1);
    for (int n = 2; n <= 5; ++n) CHECK(check_morphism(example64_table(n)).pass());
  }

  TEST_CASE("table at N = 6 has two inconsistent pairs") {
    const auto rep = check_morphism(example64_table(6));
    REQUIRE(rep.violations.size() == 2);
    const auto& src = *example64_table(6).source();
    std::set<std::pair<std::string, std::string>> bad;
    for (const auto& v : rep.violations) {
      bad.insert({src.name(v.i), src.name(v.j)});
      CHECK(v.observed == 0);
      CHECK(std::abs(v.expected) == 1);
    }
    CHECK(bad.count({"a_{5,2}", "a_{5,3}"}) == 1);
    CHECK(bad.count({"a_{5,3}", "a_{5,5}"}) == 1);
    // no other convention repairs them
    for (const auto& s : sweep_conventions([](const Convention& c) { return example64_table(6, c); })) CHECK_FALSE(s.report.pass());
  }

  TEST_CASE("frozen conventions match the golden file") {
    const Json g = golden("conventions.json");
    CHECK(g["thm61"] == frozen_thm61_convention().to_json());
    CHECK(g["full"]["upper"] == frozen_full_convention().first.to_json());
    CHECK(g["full"]["lower"] == frozen_full_convention().second.to_json());
    CHECK(g["reduced"] == frozen_reduced_convention().to_json());
    CHECK(g["example64"] == frozen_example64_convention().to_json());

    // each frozen convention is the first candidate of the sweep that passes
    auto first_pass = [](const std::vector<SweepEntry>& sweep) {
      for (const auto& s : sweep)
        if (s.report.pass()) return s.convention;
      return Json();
    };
    for (int n = 3; n <= 6; ++n) {
      CHECK(first_pass(sweep_conventions([n](const Convention& c) { return thm61_embedding(n, c); })) == g["thm61"]);
      CHECK(first_pass(sweep_full_conventions(n)) == g["full"]);
      CHECK(first_pass(sweep_conventions([n](const Convention& c) { return reduced_embedding(n, c); })) == g["reduced"]);
    }
    // at N = 2 the flip (u, v) -> (v^{-1}, u^{-1}) makes two candidates pass
    for (int n = 3; n <= 5; ++n)
      CHECK(first_pass(sweep_conventions([n](const Convention& c) { return example64_table(n, c); })) == g["example64"]);
  }

  TEST_CASE("monomial minimality search") {
    const auto two = monomial_minimality_search(2);
    CHECK(two.found);
    const auto three = monomial_minimality_search(3);
    CHECK(three.found);
    for (const auto& row : three.images)
      for (int x : row) CHECK((x == 0 || x == 1));
    const auto four = monomial_minimality_search(4);
    CHECK((four.found || four.budget_exhausted));
  }
}
