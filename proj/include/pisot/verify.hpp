#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pisot/fixtures.hpp"
#include "pisot/io.hpp"
#include "pisot/pipeline.hpp"

namespace pisot {

struct VerificationConfig {
  int max_word_length = 7;
  int exhaustive_alphabet_limit = 9;  // pair alphabets above this get sampled
  int sample_count = 2000;            // samples per word length when sampling
  unsigned long long seed = 0;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample when failing, summary otherwise
};

/* The full invariant suite over the shipped fixtures; deterministic given the
 * config.  series_override replaces the embedded greedy-indexed input series,
 * which is how corrupted input files are shown to be caught (the golden
 * comparison checks fail, the self-consistent construction checks do not). */
std::vector<CheckResult> run_verification(
    const VerificationConfig& config,
    const LinearRepresentation<NatSemiring>* series_override = nullptr);

json verification_to_json(const VerificationConfig& config,
                          const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

/* ------------------------------------------------------------------ *
 * Oracle helpers, shared with the unit tests and the acceptance runner.
 * Everything here computes from numeration arithmetic only, never from the
 * automata under test.                                                */
namespace oracle {

/* digits ∈ 0*greedy: strip leading zeros, then every suffix must be smaller
 * than the next term (all-negative words check their negation). */
bool in_zero_greedy(const NumerationSystem& ns, const std::vector<int>& digits);

/* v is a same-length padded normal form of u, componentwise:
 * val_j(u_j) = val_j(v_j) and v_j ∈ 0*(greedy ∪ -greedy). */
bool pair_normalizes(const SystemTuple& systems, const Word& u, const Word& v);

/* Automaton-vs-oracle agreement over every pair word (u, v) of length
 * <= max_len with u over first_blocks and v over the componentwise canonical
 * digits (their negations too when signed_second).  Pairs the automaton never
 * saw count as rejected.  Returns the first disagreeing pair, formatted. */
std::optional<std::string> check_normalizer_exhaustive(const MultiTapeDFA& n,
                                                       const SystemTuple& systems, int max_len,
                                                       const std::vector<Letter>& first_blocks,
                                                       bool signed_second);

/* Sampled variant for large alphabets: uniform pair words, constructed
 * normal-form positives, and one-digit near-misses, all seeded. */
std::optional<std::string> check_normalizer_sampled(const MultiTapeDFA& n,
                                                    const SystemTuple& systems, int max_len,
                                                    const std::vector<Letter>& first_blocks,
                                                    bool signed_second, int samples,
                                                    unsigned long long seed);

/* Count accepted second blocks v for the fixed first block u (DP over the
 * pair automaton; no enumeration of v). */
long long count_second_blocks(const MultiTapeDFA& n, const Word& u);

std::string format_pair(const Word& u, const Word& v);

/* First word (<= max_len, over x's alphabet) where the two series differ;
 * the alphabets must agree. */
template <class K>
std::optional<std::string> first_coefficient_mismatch(const LinearRepresentation<K>& x,
                                                      const LinearRepresentation<K>& y,
                                                      int max_len) {
  require(x.alphabet == y.alphabet, "coefficient comparison needs equal alphabets");
  std::vector<Letter> word;
  std::optional<std::string> found;
  auto dfs = [&](auto&& self, const Matrix<K>& rowx, const Matrix<K>& rowy, int depth) -> void {
    if (found) return;
    typename K::Value cx = mat_mul(rowx, x.gamma).at(0, 0);
    typename K::Value cy = mat_mul(rowy, y.gamma).at(0, 0);
    if (!K::eq(cx, cy)) {
      found = word_to_display(Word(x.dim, word)) + ": " + K::to_string(cx) + " vs " +
              K::to_string(cy);
      return;
    }
    if (depth == max_len) return;
    for (std::size_t li = 0; li < x.alphabet.size(); ++li) {
      word.push_back(x.alphabet[li]);
      self(self, mat_mul(rowx, x.mu[li]), mat_mul(rowy, y.mu[li]), depth + 1);
      word.pop_back();
      if (found) return;
    }
  };
  dfs(dfs, x.lambda, y.lambda, 0);
  return found;
}

/* First word where the series coefficient differs from reference(word). */
template <class K, class F>
std::optional<std::string> first_against_reference(const LinearRepresentation<K>& x, F&& reference,
                                                   int max_len) {
  std::vector<Letter> word;
  std::optional<std::string> found;
  auto dfs = [&](auto&& self, const Matrix<K>& row, int depth) -> void {
    if (found) return;
    Word w(x.dim, word);
    typename K::Value got = mat_mul(row, x.gamma).at(0, 0);
    typename K::Value want = reference(w);
    if (!K::eq(got, want)) {
      found = word_to_display(w) + ": " + K::to_string(got) + " vs expected " +
              K::to_string(want);
      return;
    }
    if (depth == max_len) return;
    for (std::size_t li = 0; li < x.alphabet.size(); ++li) {
      word.push_back(x.alphabet[li]);
      self(self, mat_mul(row, x.mu[li]), depth + 1);
      word.pop_back();
      if (found) return;
    }
  };
  dfs(dfs, x.lambda, 0);
  return found;
}

/* f(||val(w)||) by the arithmetic route: componentwise |value|, greedy rep,
 * then one evaluation of the greedy-indexed input. */
template <class K>
typename K::Value value_oracle(const LinearRepresentation<K>& g, const SystemTuple& systems,
                               const Word& w) {
  std::vector<BigInt> vals = val_vec(systems, w);
  for (auto& v : vals)
    if (v < 0) v = -v;
  return linrep_eval(g, rep_vec(systems, vals));
}

}  // namespace oracle

}  // namespace pisot
