// The combinatorial layer of the character-sum machinery: linkage functions
// Phi over finite index sets, exhaustive maximal-unlinked-set search,
// admissibility through the square-class specializations (rational alpha:
// perfect-square tests; quadratic alpha: square-in-Q(sqrt d) with bounded
// cyclotomic twists), and exact truncated sums S(N) by direct summation.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistscan/bigint.hpp"

namespace twistscan::descent {

struct SquareClassDatum {
  bool quadratic = false;
  Rat r;        // rational alpha
  Rat qu, qv;   // quadratic alpha = qu + qv sqrt(disc)
  Int disc;
  Int c = Int(1);  // cyclotomic modulus c_i
};

struct IndexWeight {
  int base = 1;            // f(p) = 1/base at counted primes; 1 = trivial
  Int omega_top = Int(0);  // nonzero: count only p with (omega_top/p) = 1
  std::vector<Int> sandwich;  // require (d/p) = 1 for all p | n, each d here
};

struct IndexCharacter {
  Int jacobi_top = Int(1);  // multiply (jacobi_top / p)
  bool artin = false;       // multiply the Artin symbol of alpha over
  int64_t artin_A = 0;      // K = Q(sqrt(A^2-4B)), alpha = (-A+sqrt(...))/2
  int64_t artin_B = 0;      // (zero character unless p splits in K(sqrt B))
};

struct LinkageSpec {
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> Phi;  // values in F_2, zero diagonal
  std::vector<std::vector<int>> J_sets;
  std::vector<SquareClassDatum> alpha;
  std::vector<IndexWeight> weights;
  std::vector<IndexCharacter> chars;
  std::vector<Int> betas;

  size_t size() const { return names.size(); }
  void validate() const;  // diagonal zero, sizes consistent, |I| <= 64
  bool linked(int i, int j) const { return (Phi[i][j] ^ Phi[j][i]) != 0; }
};

struct UnlinkedReport {
  int M = 0;
  std::vector<std::vector<int>> maximum_sets;  // all unlinked sets of size M
  std::vector<std::vector<int>> maximal_sets;  // all maximal unlinked sets
};
UnlinkedReport unlinked_max_sets(const LinkageSpec& spec);

struct Admissibility {
  bool ok = false;        // (P3) and (P4) hold
  bool inside_J = false;  // contained in some excluded subset (fails (P1))
  std::string reason;     // failed properties, empty when ok
};
Admissibility admissible(const LinkageSpec& spec, const std::vector<int>& U);

struct TruncatedSum {
  Rat S;            // the full truncated sum
  Rat main_term;    // over admissible maximum unlinked sets outside the J's
  Int tuple_count;  // qualifying tuples (coprimality + exclusions)
};
// Exhaustive sum over tuples (D_i) of positive integers with square-free
// product <= N coprime to 2 prod beta_i and prod_{i not in J_k} D_i != 1.
TruncatedSum truncated_S(const LinkageSpec& spec, int64_t N);

// Concrete instantiations.
LinkageSpec spec_pair_demo();  // two indices, Phi(1,2) = 1: the hand fixture
LinkageSpec spec_full12(int64_t A, int64_t B, int64_t Dt, int64_t gamma1,
                        int64_t gamma2, int64_t gamma3);
LinkageSpec spec_foursquare32(int64_t a, int64_t b);
LinkageSpec spec_partial4(int64_t A, int64_t B, int64_t delta, int64_t gamma1,
                          int64_t gamma2, int64_t Dt);

// Text round-trip (index names, Phi rows, J lists).
std::string serialize_spec(const LinkageSpec& spec);
LinkageSpec parse_spec(const std::string& text);

}  // namespace twistscan::descent
