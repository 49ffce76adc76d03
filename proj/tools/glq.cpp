#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "glq/classical.hpp"
#include "glq/suites.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Output {
  std::string format = "text";
  std::string out;
  bool verbose = false;
};

int emit(const glq::VerificationReport& rep, const Output& o, const glq::Json& extra = glq::Json()) {
  std::string text;
  if (o.format == "json") {
    glq::Json j = rep.to_json();
    if (!extra.is_null())
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    text = j.dump(2) + "\n";
  } else {
    text = rep.to_text(o.verbose);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kUsage;
    }
    f << text;
    std::cout << (rep.pass() ? "PASS " : "FAIL ") << rep.suite << " -> " << o.out << "\n";
  }
  return rep.pass() ? kPass : kFail;
}

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "Write the report to FILE");
  cmd->add_flag("--verbose,-v", o.verbose, "List passing records in text output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-Lusztig decomposition of GL_q(N): symbolic and numeric checks"};
  app.require_subcommand(1);

  int n = 3;
  std::string word, mode;
  int dim = 0, samples = 50;
  std::uint64_t seed = 1;
  bool no_haar = false;
  Output o;

  auto* verify = app.add_subcommand("verify", "Minor relations, cluster formula and exponents, det_q, coproduct");
  verify->add_option("--n", n, "Matrix size")->check(CLI::Range(1, glq::kMaxVerifyN));
  verify->add_option("--word", word, "Reduced word of w0, e.g. 121 or 1,2,1");
  verify->add_option("--dim", dim, "Root-of-unity order d for the word chart (q = exp(i pi / d))")->check(CLI::Range(2, 64));
  verify->add_option("--seed", seed, "Seed for the numeric scalars");
  add_output_flags(verify, o);

  auto* embed = app.add_subcommand("embed", "Quantum torus embeddings");
  embed->add_option("--n", n, "Matrix size")->check(CLI::Range(2, 12));
  embed->add_option("--mode", mode, "Embedding family")
      ->required()
      ->check(CLI::IsMember({"thm61", "full", "reduced", "minimal", "example64"}));
  add_output_flags(embed, o);

  auto* classical = app.add_subcommand("classical", "Parameter round trip, total positivity, Haar density at q = 1");
  classical->add_option("--n", n, "Matrix size")->check(CLI::Range(1, 8));
  classical->add_option("--samples", samples, "Random samples per check")->check(CLI::Range(1, 100000));
  classical->add_option("--seed", seed, "RNG seed");
  classical->add_flag("--no-haar", no_haar, "Skip the Haar density checks");
  add_output_flags(classical, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      glq::VerifyOptions opt;
      opt.n = n;
      opt.d = dim;
      opt.seed = seed;
      if (!word.empty()) opt.word = glq::parse_word(word);
      return emit(glq::verify_suite(opt), o);
    }
    if (*embed) {
      const auto res = glq::embed_suite(n, mode);
      return emit(res.report, o, glq::Json{{"morphism", res.morphism}});
    }
    if (*classical) {
      glq::VerificationReport rep;
      if (no_haar || n > 4) {
        rep.suite = "classical";
        rep.params = {{"N", n}, {"samples", samples}, {"seed", seed}};
        rep.absorb(glq::round_trip_check(n, samples, seed));
        rep.absorb(glq::positivity_check(n, samples, seed));
        rep.absorb(glq::q1_consistency_check(n, std::min(samples, 20), seed));
      } else {
        rep = glq::classical_suite(n, samples, seed);
      }
      return emit(rep, o);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
