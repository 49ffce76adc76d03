#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "glq/chart.hpp"
#include "glq/morphism.hpp"
#include "glq/report.hpp"
#include "glq/symplectic.hpp"

namespace glq {

/// Weyl pairs (u_a, v_a) with C(u_a, v_a) = orientation_a, followed by central
/// generators. Cross-pair entries are zero.
SignaturePtr make_tori_signature(const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::vector<int>& orientation, const std::vector<std::string>& central = {});

/// Reading of "uv = q^2 vu" for the target pairs of a published embedding, and
/// whether the diagonal source generators go to the published image or its inverse.
struct Convention {
  int orientation = 1;
  bool invert_diagonal = false;

  std::string label() const;
  Json to_json() const;
  friend bool operator==(const Convention&, const Convention&) = default;
};

/// (+,direct), (+,inverted), (-,direct), (-,inverted)
const std::array<Convention, 4>& convention_candidates();

/// Conventions under which the published families pass; they are also pinned
/// in tests/golden/conventions.json.
Convention frozen_thm61_convention();
std::pair<Convention, Convention> frozen_full_convention();  // upper, lower half
Convention frozen_reduced_convention();                     // diagonal pairs (U_i, V_i)
Convention frozen_example64_convention();

/// a_{mn} -> u_m (prod_{k=n}^{m-1} v_{m-1,k}) (prod_{l<n} v_{m,l}) u_{m,n}, v_m -> v_m^{+-1},
/// with u_{N-1,N-1} := 1; (N^2+N-4)/2 pairs.
Morphism thm61_embedding(int n, Convention c = frozen_thm61_convention());

/// b_{mn} -> v'_m (prod v'_{m-1,k}) (prod v'_{m,l}) u'_{m,n}, u_m -> u'_m^{+-1}.
Morphism lower_embedding(int n, Convention c = frozen_full_convention().second);

/// Both halves on disjoint pairs: N^2+N-4 pairs, source is the full chart.
Morphism full_embedding(int n, Convention upper = frozen_full_convention().first,
                        Convention lower = frozen_full_convention().second);

/// Chart of GL_q(N) with the diagonal merged: a_{mn}, T_k = u_k v_{k-1} (k = 1..N), b_{mn}.
struct MergedChart {
  SignaturePtr signature;
  Morphism into_full;  ///< T_k -> u_k v_{k-1}, identity on a and b
};
MergedChart merged_chart(int n);

/// a_{mn} -> U_{m+1} (v's) u_{mn}, b_{mn} -> U_m^{-1} (v''s) u'_{mn}, T_k -> V_k^{+-1}: N^2-2 pairs.
/// The non-diagonal pairs keep the frozen orientations of the full family.
Morphism reduced_embedding(int n, Convention diagonal = frozen_reduced_convention());

/// One row of the published table: q^{q_power} times the listed letters in order.
struct TableEntry {
  std::string generator;  ///< a_{m,n} or u_m as printed (u_m is the diagonal v_m of the chart)
  int q_power;
  std::vector<std::string> letters;  ///< e.g. {"V_2","U_2","U_3"}
  std::string printed() const;
};
const std::vector<TableEntry>& example64_entries();

/// The published table restricted to the chart of size N (2 <= N <= 6) on 9 pairs U_i, V_i.
Morphism example64_table(int n = 6, Convention c = frozen_example64_convention());

struct SweepEntry {
  Json convention;
  MorphismReport report;
};
std::vector<SweepEntry> sweep_conventions(const std::function<Morphism(const Convention&)>& build);
std::vector<SweepEntry> sweep_full_conventions(int n);

/// Embedding into minimal_tori pairs U_i, V_i plus central Z_j read off S^{-1};
/// images are Weyl-balanced. Throws std::domain_error naming any divisor d > 1.
Morphism minimal_embedding(const SignaturePtr& sig);

struct MinimalitySearch {
  bool found = false;
  bool budget_exhausted = false;
  long long nodes = 0;
  std::vector<std::vector<int>> images;  ///< exponent rows in {0,1}
  SignaturePtr target;
};

/// Backtracking search for an embedding of the upper chart into floor(N^2/4) pairs
/// (plus central generators) with every image exponent in {0,1}.
MinimalitySearch monomial_minimality_search(int n, long long budget = 2'000'000);

/// check_morphism wrapped as a report, with target size and convention record.
VerificationReport embedding_report(const std::string& family, int n, const Morphism& f, const Json& convention);

}  // namespace glq
