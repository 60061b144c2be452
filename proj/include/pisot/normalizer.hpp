#pragma once

#include <vector>

#include "pisot/dfa.hpp"
#include "pisot/numeration.hpp"

namespace pisot {

/* Two-track carry automaton: accepts (u, v) with u over tape1_digits, v over
 * tape2_digits, |u| = |v| and value(u) = value(v).  States are carry vectors
 * expressing the accumulated difference in the basis U(n-k), ..., U(n-k+m-1)
 * that shifts along with the read position; reading a column with digit
 * difference e maps every recurrence-root coordinate x to beta_root * x + e,
 * which gives the finite box the states are pruned to. */
MultiTapeDFA build_equality_dfa(const NumerationSystem& ns, const std::vector<int>& tape1_digits,
                                const std::vector<int>& tape2_digits);

/* Single-track automaton for 0*rep_U(N) built without any normalizer: a word
 * is (zero-padded) greedy iff no equal-length equal-value word over the
 * canonical digit alphabet is lexicographically greater, after allowing extra
 * left zero padding (Zeckendorf "11" is only beaten by "100" one column
 * wider).  Complement of the projected bad set, determinized. */
MultiTapeDFA greedy_zero_dfa(const NumerationSystem& ns);

/* Normalizer over digits x canonical alphabet: accepts (u, v) iff
 * v in 0* rep(value(u)).  Requires value(u) >= 0 to ever accept; use the
 * extended normalizer for signed digit sets.  Refuses non-Pisot systems
 * unless assume_pisot. */
MultiTapeDFA build_base_normalizer(const NumerationSystem& ns, const std::vector<int>& digits,
                                   bool assume_pisot = false);

/* Signed-digit normalizer: accepts (u, v) with u over digits, v over the
 * canonical alphabet and its negation, iff v is the zero-padded signed normal
 * form of u (negated greedy digits when value(u) < 0).  Built from the base
 * normalizer on the enclosing symmetric interval plus its negation mirror. */
MultiTapeDFA build_extended_normalizer(const NumerationSystem& ns, const std::vector<int>& digits,
                                       bool assume_pisot = false);

/* d-track version over an alphabet of digit vectors: accepts (u, v) iff
 * v in 0* normalize(u), track-wise normal forms left-padded together. */
MultiTapeDFA build_multidim_normalizer(const SystemTuple& systems,
                                       const std::vector<Letter>& alphabet,
                                       bool assume_pisot = false);

/* Minimal automaton of 0*rep_U(N) obtained as the diagonal of the base
 * normalizer on the canonical alphabet (cross-checked against
 * greedy_zero_dfa in tests). */
MultiTapeDFA greedy_language_dfa(const NumerationSystem& ns);

/* Track-wise normal form: greedy representation of |value|, digits negated
 * for negative values, all tracks left-padded with 0 to the longest. */
Word normalize_word(const SystemTuple& systems, const Word& w);

}  // namespace pisot
