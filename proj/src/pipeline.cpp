#include "pisot/pipeline.hpp"

namespace pisot {

std::vector<Letter> cartesian_letters(const std::vector<std::vector<int>>& tracks) {
  require(!tracks.empty(), "cartesian_letters: no tracks");
  std::vector<Letter> out{{}};
  for (const auto& track : tracks) {
    require(!track.empty(), "cartesian_letters: empty track");
    std::vector<Letter> next;
    for (const auto& prefix : out)
      for (int digit : track) {
        Letter l = prefix;
        l.push_back(digit);
        next.push_back(std::move(l));
      }
    out = std::move(next);
  }
  return sorted_alphabet(std::move(out));
}

MultiTapeDFA rep_language_dfa(const SystemTuple& systems) {
  require(!systems.empty(), "rep_language_dfa: empty system tuple");
  const int d = int(systems.size());
  std::vector<std::vector<int>> tracks;
  for (const auto& ns : systems) tracks.push_back(ns.digit_alphabet());
  std::vector<Letter> alphabet = cartesian_letters(tracks);

  /* Track j must stay in 0*greedy: run the track-j automaton on entry j. */
  auto cylinder = [&](const MultiTapeDFA& part, int j) {
    MultiTapeDFA r;
    r.dim = d;
    r.alphabet = alphabet;
    r.initial = part.initial;
    r.is_final = part.is_final;
    r.next.assign(part.num_states(), std::vector<int>(alphabet.size(), -1));
    for (int q = 0; q < part.num_states(); ++q)
      for (std::size_t li = 0; li < alphabet.size(); ++li) {
        int pi = part.letter_index({alphabet[li][j]});
        if (pi >= 0) r.next[q][li] = part.next[q][pi];
      }
    return r;
  };

  MultiTapeDFA acc = cylinder(greedy_language_dfa(systems[0]), 0);
  for (int j = 1; j < d; ++j) acc = intersect(acc, cylinder(greedy_language_dfa(systems[j]), j));

  /* The first column must be nonzero (empty word allowed): that pins the
   * padding to the longest track, making rep(val(w)) = w on the language. */
  MultiTapeDFA gate;
  gate.dim = d;
  gate.alphabet = alphabet;
  gate.initial = 0;
  gate.is_final = {1, 1};
  gate.next.assign(2, std::vector<int>(alphabet.size(), -1));
  for (std::size_t li = 0; li < alphabet.size(); ++li) {
    gate.next[0][li] = is_zero_letter(alphabet[li]) ? -1 : 1;
    gate.next[1][li] = 1;
  }

  return minimize(intersect(acc, gate));
}

}  // namespace pisot
