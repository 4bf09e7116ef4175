#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibered/words.hpp"

namespace fibered {

// Knobs shared by all statement verifiers. "trials" counts randomized
// checks on top of any fixed exhaustive phase a verifier runs first.
struct run_config {
  int genus = 2;
  int euler = 1;
  std::uint64_t seed = 0;
  int trials = 100;
  int max_word_len = 6;
  int oracle_depth = 2;
};

struct trial_outcome {
  int index = 0;
  bool passed = false;
  std::string detail;  // empty on pass, counterexample data on failure
};

struct verification_report {
  std::string statement;
  int genus = 0;
  int euler = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  std::string convention;             // which inner direction validates
  std::vector<std::string> notes;     // statement-specific counters
  std::vector<trial_outcome> failures;

  bool ok() const { return failed == 0 && trials > 0; }
};

// Probes both conjugation directions against the push factorization on a
// small instance and reports the one that holds. Exactly one must.
std::string convention_note();

// lift then project is the identity; lifted maps land in the
// relation-preserving symplectic group.
verification_report verify_splitting(const run_config& cfg);

// kernel coordinates: tau(fiber twist by delta(gamma)) recovers
// delta(gamma) on the basis, and tau turns composition into addition.
verification_report verify_kernel_tau(const run_config& cfg);

// fiber twists commute with every inner automorphism.
verification_report verify_commutation(const run_config& cfg);

// the lift respects composition on push-generated maps.
verification_report verify_sigma_homomorphism(const run_config& cfg);

// lifted point-pushing factors as inner part times fiber twist, for
// standard generators, random loops, and second lifts of the same loop.
verification_report verify_prop_3_3(const run_config& cfg);

// stripping the inner part leaves exactly the fiber twist by k times the
// dual class; commutator loops leave no twist at all.
verification_report verify_cor_3_4(const run_config& cfg);

// combined statement: splitting, the twist formula, and linearity of the
// twist in the euler number, on shared samples.
verification_report verify_theorem_a(const run_config& cfg);

// twist part at euler number k is exactly k times the twist at 1.
verification_report verify_k_linearity(const run_config& cfg);

// small-cancellation reduction vs breadth-first certificates on a word
// batch; disagreement anywhere is a failure.
verification_report verify_word_problem_oracle(const run_config& cfg,
                                               const std::vector<free_word>& words);

// genus-1 sweep: normal form vs exhaustive certificate closure over every
// reduced word up to cfg.max_word_len.
verification_report verify_torus_oracle(const run_config& cfg);

// deterministic corpus recipe used for the frozen genus-2 word list:
// mostly random reduced words, the rest planted relator conjugates.
std::vector<free_word> generate_fixture_words(int genus, std::uint64_t seed,
                                              int count, int max_len);

// one word per line, # lines and blank lines skipped
std::vector<free_word> load_fixture_words(const std::string& path, int genus);

std::string format_report(const verification_report& rep);

}  // namespace fibered
