#pragma once

#include <string>
#include <vector>

#include "glq/numeric.hpp"

namespace glq {

struct BraidTriple {
  CMatrix a, b, c;
};

/// a' = (a+c)^{-1} c b, b' = a + c, c' = (a+c)^{-1} a b. Throws std::domain_error
/// if a + c is numerically singular.
BraidTriple braid_phi(const BraidTriple& in);

struct BraidCheck {
  double input_relations = 0.0;  ///< ca = q^2 ac, ab = q^2 ba, bc = cb
  double forms = 0.0;            ///< a' = bc(a+c)^{-1}, c' = ba(a+c)^{-1}
  double primed = 0.0;           ///< b'c' = q^2 c'b', c'a' = q^2 a'c'
  double involution = 0.0;       ///< phi(phi(a,b,c)) = (a,b,c)
  double matrix_identity = 0.0;  ///< x_2(a)x_1(b)x_2(c) = x_1(a')x_2(b')x_1(c') on 3x3 blocks
  double worst() const;
};

BraidCheck check_braid_phi(const BraidTriple& in, Complex q);

/// Random triple with the input relations: clock/shift generators of the
/// three-generator torus with positive scales drawn from the seed.
BraidTriple random_braid_triple(int d, std::uint64_t seed);

// --- reduced words of the longest element ---

using ReducedWord = std::vector<int>;

ReducedWord parse_word(const std::string& text);
std::string word_text(const ReducedWord& w);

/// Length N(N-1)/2, letters in 1..N-1 and reduced.
bool is_reduced_word_of_w0(const ReducedWord& w, int n);

/// for n = 1..N-1: letters N-1 down to n, parameters a_{N-1,n}, ..., a_{n,n}.
ReducedWord canonical_word(int n);

std::vector<ReducedWord> all_reduced_words(int n);

struct WordMove {
  std::size_t position;  ///< first letter touched
  bool braid;            ///< 3-move (true) or 2-move (false)
};

/// Shortest sequence of moves from `from` to `to`.
std::vector<WordMove> move_path(const ReducedWord& from, const ReducedWord& to);

/// Expected pairwise exponent between the parameters at positions p < r:
/// same letter -1, letter i then i-1 +1, anything else 0; and +1 between a
/// parameter on letter i and v_i.
int predicted_word_relation(int earlier, int later);

struct WordChart {
  ReducedWord word;
  int d = 0;
  std::vector<CMatrix> params;  ///< one per letter, in word order
  std::vector<CMatrix> v;       ///< v_1..v_{N-1}
  IntMatrix measured;           ///< params then v's
  IntMatrix predicted;
  double max_deviation = 0.0;
  double max_residual = 0.0;
  double minor_residual = 0.0;
  VerificationReport report;
};

/// Transports the canonical chart (realized by build_rep) to `word` by 2-moves
/// and braid_phi, measures all commutation exponents, checks the local
/// diagram for every pattern i..j..i with |i-j| = 1 and the GL_q(2) relations of
/// the assembled T^+U^+.
WordChart word_chart(int n, const ReducedWord& word, int d, std::uint64_t seed = 1);

}  // namespace glq
