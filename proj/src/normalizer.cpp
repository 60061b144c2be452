#include "pisot/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>

namespace pisot {

namespace {

constexpr std::size_t kCarryStateCap = 2'000'000;

std::vector<Letter> pair_alphabet(const std::vector<int>& t1, const std::vector<int>& t2) {
  std::vector<Letter> letters;
  for (int a : t1)
    for (int b : t2) letters.push_back({a, b});
  return sorted_alphabet(std::move(letters));
}

}  // namespace

MultiTapeDFA build_equality_dfa(const NumerationSystem& ns, const std::vector<int>& tape1_digits,
                                const std::vector<int>& tape2_digits) {
  require(!tape1_digits.empty() && !tape2_digits.empty(), "carry automaton needs digit sets");
  const int m = ns.order();
  const auto& c = ns.recurrence();

  int max_diff = 0;
  for (int a : tape1_digits)
    for (int b : tape2_digits) max_diff = std::max(max_diff, std::abs(a - b));
  const double big_d = double(max_diff);

  /* Retention box in root-coordinate space.  The dominant coordinate of a
   * state on an accepting run stays below D*beta/(beta-1); every reachable
   * state keeps each small-root coordinate below D/(1-|root|) outright. */
  const double beta = ns.beta();
  const double dominant_bound = big_d * beta / (beta - 1.0) + 1e-6;
  std::vector<std::pair<std::complex<double>, double>> small_roots;
  for (const auto& root : ns.conjugates()) {
    double mod = std::abs(root);
    if (mod < 1.0 - 1e-9) small_roots.emplace_back(root, big_d / (1.0 - mod) + 1e-6);
  }

  auto within_box = [&](const std::vector<int>& s) {
    double dom = 0.0;
    for (int j = m - 1; j >= 0; --j) dom = dom * beta + double(s[j]);
    if (std::abs(dom) > dominant_bound) return false;
    for (const auto& [root, bound] : small_roots) {
      std::complex<double> x = 0.0;
      for (int j = m - 1; j >= 0; --j) x = x * root + double(s[j]);
      if (std::abs(x) > bound) return false;
    }
    return true;
  };

  std::vector<BigInt> initial_terms(m);
  for (int j = 0; j < m; ++j) initial_terms[j] = ns.term(j);
  auto is_zero_difference = [&](const std::vector<int>& s) {
    BigInt total = 0;
    for (int j = 0; j < m; ++j) total += BigInt(s[j]) * initial_terms[j];
    return total == 0;
  };

  MultiTapeDFA r;
  r.dim = 2;
  r.tape_split = 1;
  r.alphabet = pair_alphabet(tape1_digits, tape2_digits);

  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> queue;
  auto state = [&](const std::vector<int>& s) {
    auto [it, inserted] = id.emplace(s, int(id.size()));
    if (inserted) {
      require(id.size() <= kCarryStateCap, "carry automaton exceeded the state cap for system " +
                                               ns.name() + "; is the system Pisot?");
      queue.push_back(s);
      r.is_final.push_back(is_zero_difference(s));
      r.next.emplace_back(r.alphabet.size(), -1);
    }
    return it->second;
  };
  state(std::vector<int>(m, 0));
  while (!queue.empty()) {
    std::vector<int> s = queue.front();
    queue.pop_front();
    int from = id[s];
    for (std::size_t li = 0; li < r.alphabet.size(); ++li) {
      int e = r.alphabet[li][0] - r.alphabet[li][1];
      /* Shift the basis window down one position: coordinate j picks up the
       * previous coordinate j-1 plus the recurrence expansion of the old top
       * coordinate; the new digit difference lands in coordinate 0. */
      std::vector<int> t(m);
      for (int j = 0; j < m; ++j) {
        long long v = (j == 0 ? e : s[j - 1]) + c[m - 1 - j] * (long long)s[m - 1];
        require(v >= INT32_MIN && v <= INT32_MAX, "carry overflow");
        t[j] = int(v);
      }
      if (!within_box(t)) continue;
      r.next[from][li] = state(t);
    }
  }
  r.initial = 0;
  return r;
}

MultiTapeDFA greedy_zero_dfa(const NumerationSystem& ns) {
  const std::vector<int> digits = ns.digit_alphabet();
  MultiTapeDFA eq = build_equality_dfa(ns, digits, digits);

  /* Track 2 lexicographically greater than track 1. */
  MultiTapeDFA gt;
  gt.dim = 2;
  gt.tape_split = 1;
  gt.alphabet = pair_alphabet(digits, digits);
  gt.initial = 0;
  gt.is_final = {0, 1};
  gt.next.assign(2, std::vector<int>(gt.alphabet.size(), -1));
  for (std::size_t li = 0; li < gt.alphabet.size(); ++li) {
    int a = gt.alphabet[li][0], b = gt.alphabet[li][1];
    gt.next[0][li] = a == b ? 0 : (a < b ? 1 : -1);
    gt.next[1][li] = 1;
  }

  /* (v, w): equal length, equal value, w beats v. */
  MultiTapeDFA beaten = intersect(eq, gt);

  NFA bad = project_first(beaten, 1);

  /* Allow extra left zero padding on v before the beating starts: close the
   * initial set under edges that read digit 0 on track 1. */
  int zero_idx = int(std::lower_bound(bad.alphabet.begin(), bad.alphabet.end(), Letter{0}) -
                     bad.alphabet.begin());
  require(zero_idx < int(bad.alphabet.size()) && bad.alphabet[zero_idx] == Letter{0},
          "digit alphabet must contain 0");
  {
    std::deque<int> queue(bad.initials.begin(), bad.initials.end());
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int t : bad.next[q][zero_idx])
        if (bad.initials.insert(t).second) queue.push_back(t);
    }
  }

  return minimize(trim(complement(determinize(bad))));
}

MultiTapeDFA build_base_normalizer(const NumerationSystem& ns, const std::vector<int>& digits,
                                   bool assume_pisot) {
  PisotVerdict verdict = ns.pisot_check();
  require(verdict.ok() || assume_pisot,
          "system " + ns.name() + " failed the Pisot check (" + verdict.detail +
              "); pass assume_pisot to proceed anyway");

  MultiTapeDFA eq = build_equality_dfa(ns, digits, ns.digit_alphabet());
  MultiTapeDFA greedy = greedy_zero_dfa(ns);

  /* Lift the track-2 greedy condition to the pair alphabet. */
  MultiTapeDFA lifted;
  lifted.dim = 2;
  lifted.tape_split = 1;
  lifted.alphabet = eq.alphabet;
  lifted.initial = greedy.initial;
  lifted.is_final = greedy.is_final;
  lifted.next.assign(greedy.num_states(), std::vector<int>(eq.alphabet.size(), -1));
  for (int q = 0; q < greedy.num_states(); ++q)
    for (std::size_t li = 0; li < eq.alphabet.size(); ++li) {
      int bi = greedy.letter_index({eq.alphabet[li][1]});
      if (bi >= 0) lifted.next[q][li] = greedy.next[q][bi];
    }

  MultiTapeDFA n = minimize(trim(intersect(eq, lifted)));
  n.tape_split = 1;
  return n;
}

MultiTapeDFA build_extended_normalizer(const NumerationSystem& ns, const std::vector<int>& digits,
                                       bool assume_pisot) {
  require(!digits.empty(), "extended normalizer needs a digit set");
  int bound = 0;
  for (int a : digits) bound = std::max(bound, std::abs(a));
  std::vector<int> symmetric;
  for (int a = -bound; a <= bound; ++a) symmetric.push_back(a);

  MultiTapeDFA plus = build_base_normalizer(ns, symmetric, assume_pisot);
  MultiTapeDFA minus = mirror_negate(plus);
  MultiTapeDFA both = union_dfa(plus, minus);

  std::vector<Letter> keep;
  for (int a : digits) keep.push_back({a});
  MultiTapeDFA n = minimize(trim(filter_first_component(both, keep, 1)));
  n.tape_split = 1;
  return n;
}

MultiTapeDFA build_multidim_normalizer(const SystemTuple& systems,
                                       const std::vector<Letter>& alphabet, bool assume_pisot) {
  require(!systems.empty(), "multidim normalizer needs at least one system");
  require(!alphabet.empty(), "multidim normalizer needs an alphabet");
  const int d = int(systems.size());
  for (const auto& l : alphabet)
    require(int(l.size()) == d, "alphabet letter width differs from system count");

  std::vector<MultiTapeDFA> parts;
  for (int j = 0; j < d; ++j) {
    std::vector<int> track_digits;
    for (const auto& l : alphabet) track_digits.push_back(l[j]);
    std::sort(track_digits.begin(), track_digits.end());
    track_digits.erase(std::unique(track_digits.begin(), track_digits.end()), track_digits.end());
    parts.push_back(build_extended_normalizer(systems[j], track_digits, assume_pisot));
  }

  MultiTapeDFA n = minimize(trim(filter_first_component(tensor(parts), alphabet, d)));
  n.tape_split = d;
  return n;
}

MultiTapeDFA greedy_language_dfa(const NumerationSystem& ns) {
  return minimize(diagonal_projection(build_base_normalizer(ns, ns.digit_alphabet())));
}

Word normalize_word(const SystemTuple& systems, const Word& w) {
  require(int(systems.size()) == w.dim, "normalize: word dimension differs from system tuple");
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0; j < systems.size(); ++j) {
    BigInt v = systems[j].value(word_track(w, int(j)));
    bool neg = v < 0;
    std::vector<int> digits = systems[j].greedy_rep(neg ? BigInt(-v) : v);
    if (neg)
      for (int& x : digits) x = -x;
    rows.push_back(std::move(digits));
  }
  return pad_tuple(rows);
}

}  // namespace pisot
