#pragma once

#include <set>
#include <string>
#include <vector>

#include "pisot/common.hpp"
#include "pisot/words.hpp"

namespace pisot {

/* Partial deterministic automaton over letters in Z^dim.  Missing transitions
 * are -1 (reject).  Every construction re-indexes states in breadth-first
 * discovery order from the initial state with letters scanned in alphabet
 * order, so equal inputs give byte-identical outputs.
 *
 * tape_split is a display/bookkeeping hint: when nonzero, letters are pairs
 * whose first tape_split entries form the first block (rendered "a/b" in DOT
 * exports).  It does not affect the language. */
struct MultiTapeDFA {
  int dim = 1;
  int tape_split = 0;
  std::vector<Letter> alphabet;  // sorted, duplicate-free
  int initial = 0;
  std::vector<char> is_final;               // per state
  std::vector<std::vector<int>> next;       // next[state][letter_index], -1 = undefined

  int num_states() const { return int(next.size()); }
  int num_letters() const { return int(alphabet.size()); }
  int letter_index(const Letter& l) const;
  int step(int state, int letter_idx) const { return next[state][letter_idx]; }
  bool accepts(const Word& w) const;
  void check_well_formed() const;
};

MultiTapeDFA make_empty_dfa(int dim, std::vector<Letter> alphabet);

/* Sorted duplicate-free letter list helpers. */
std::vector<Letter> sorted_alphabet(std::vector<Letter> letters);
std::vector<Letter> merge_alphabets(const std::vector<Letter>& a, const std::vector<Letter>& b);

/* Re-index reachable states in BFS discovery order (drops unreachable). */
MultiTapeDFA bfs_canonical(const MultiTapeDFA& a);

/* Keep accessible and co-accessible states.  If the initial state is cut the
 * canonical empty automaton (one non-final state, no transitions) results. */
MultiTapeDFA trim(const MultiTapeDFA& a);

/* Minimal trim partial DFA for the same language (Moore refinement against an
 * implicit dead state), states in BFS order.  Idempotent. */
MultiTapeDFA minimize(const MultiTapeDFA& a);

/* Product constructions.  Union completes both sides over the merged
 * alphabet; intersection stays partial. */
MultiTapeDFA intersect(const MultiTapeDFA& a, const MultiTapeDFA& b);
MultiTapeDFA union_dfa(const MultiTapeDFA& a, const MultiTapeDFA& b);

/* d-fold track stacking of pair automata: every part reads (a_j, b_j) with
 * one track per side; the result reads ((a_1..a_d),(b_1..b_d)) and accepts
 * iff every part accepts its track pair. */
MultiTapeDFA tensor(const std::vector<MultiTapeDFA>& parts);

/* Relabel every transition letter by entrywise negation. */
MultiTapeDFA mirror_negate(const MultiTapeDFA& a);

/* Drop transitions whose first `first_dim` letter entries are not in keep. */
MultiTapeDFA filter_first_component(const MultiTapeDFA& a, const std::vector<Letter>& keep,
                                    int first_dim);

/* From a pair automaton (dim = 2k) to the single-tape automaton accepting
 * { w : (w,w) in L(a) }. */
MultiTapeDFA diagonal_projection(const MultiTapeDFA& a);

/* Exact language comparison: harmonize alphabets, minimize, check the unique
 * minimal automata are isomorphic (BFS makes the isomorphism the identity). */
bool language_equal(const MultiTapeDFA& a, const MultiTapeDFA& b);

/* --- internal nondeterministic helpers (used by the normalizer build) --- */

struct NFA {
  int dim = 1;
  std::vector<Letter> alphabet;
  std::set<int> initials;
  std::vector<char> is_final;
  std::vector<std::vector<std::vector<int>>> next;  // next[state][letter] -> targets
};

/* Subset construction; output is complete (an explicit sink subset). */
MultiTapeDFA determinize(const NFA& a);

/* Complement of a complete DFA by flipping finals; completes first. */
MultiTapeDFA complement(const MultiTapeDFA& a);

/* Keep the first `first_dim` entries of each letter, merging transitions. */
NFA project_first(const MultiTapeDFA& a, int first_dim);

}  // namespace pisot
