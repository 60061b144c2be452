#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "pisot/normalizer.hpp"
#include "pisot/wfa.hpp"

namespace pisot {

/* All letters (a_1..a_d) with a_j drawn from tracks[j]; sorted. */
std::vector<Letter> cartesian_letters(const std::vector<std::vector<int>>& tracks);

/* Minimal automaton of the padded-representation language rep(N^d): every
 * track in 0*greedy, and the first column nonzero (or the empty word), so
 * stripping leading zero columns is the identity. */
MultiTapeDFA rep_language_dfa(const SystemTuple& systems);

/* Star product of a normalizer-shaped pair automaton with a weighted
 * automaton.  The normalizer n reads ((a_1..a_d),(b_1..b_d)); g reads the
 * coded second blocks sigma(b).  States are pairs (normalizer state,
 * g state) laid out n-state major; the edge for a goes from (q, p) to
 * (q', p') with the g-weight of sigma(b) for the unique b with
 * q --(a,b)--> q'.  Uniqueness of that b per (q, a, q') is checked. */
template <class K>
struct StarProduct {
  MultiTapeDFA normalizer;
  WeightedAutomaton<K> g;        // right factor, kept for the modification step
  WeightedAutomaton<K> product;  // over first-block letters; state (q, p) at q * g_states + p
  int n_states = 0;
  int g_states = 0;
  int g_initial = 0;  // unique nonzero-I state of g, -1 if not unique
  int d = 1;
};

using Coding = std::function<Letter(const Letter&)>;

template <class K>
StarProduct<K> star_product(const MultiTapeDFA& n, const WeightedAutomaton<K>& g,
                            const Coding& sigma = abs_letter) {
  require(n.tape_split >= 1 && n.dim == 2 * n.tape_split,
          "star product needs a pair automaton with marked block split");
  const int d = n.tape_split;
  require(g.dim == d, "star product: g letter width differs from normalizer block width");

  /* (q, a, q') must determine the second block b. */
  std::map<std::tuple<int, Letter, int>, Letter> unique_b;
  for (int q = 0; q < n.num_states(); ++q)
    for (int li = 0; li < n.num_letters(); ++li) {
      int t = n.next[q][li];
      if (t < 0) continue;
      Letter a(n.alphabet[li].begin(), n.alphabet[li].begin() + d);
      Letter b(n.alphabet[li].begin() + d, n.alphabet[li].end());
      auto [it, inserted] = unique_b.emplace(std::make_tuple(q, a, t), b);
      if (!inserted && it->second != b)
        throw ContractViolation("normalizer is not second-block deterministic between states " +
                                std::to_string(q) + " and " + std::to_string(t));
    }

  StarProduct<K> sp;
  sp.normalizer = n;
  sp.g = g;
  sp.d = d;
  sp.n_states = n.num_states();
  sp.g_states = g.num_states;
  sp.g_initial = -1;
  for (int p = 0; p < g.num_states; ++p)
    if (!K::eq(g.initial[p], K::zero())) sp.g_initial = sp.g_initial < 0 ? p : -2;

  WeightedAutomaton<K>& pr = sp.product;
  pr.dim = d;
  {
    /* first blocks of letters that label at least one move; the normalizer
     * may carry dead letters left over from alphabet filtering */
    std::vector<Letter> firsts;
    for (int li = 0; li < n.num_letters(); ++li) {
      bool live = false;
      for (int q = 0; q < n.num_states() && !live; ++q) live = n.next[q][li] >= 0;
      if (live) firsts.push_back(Letter(n.alphabet[li].begin(), n.alphabet[li].begin() + d));
    }
    pr.alphabet = sorted_alphabet(std::move(firsts));
  }
  pr.num_states = sp.n_states * sp.g_states;
  pr.initial.assign(pr.num_states, K::zero());
  pr.final_weights.assign(pr.num_states, K::zero());
  for (int p = 0; p < g.num_states; ++p) {
    pr.initial[n.initial * sp.g_states + p] = g.initial[p];
    for (int q = 0; q < sp.n_states; ++q)
      if (n.is_final[q]) pr.final_weights[q * sp.g_states + p] = g.final_weights[p];
  }

  std::vector<std::vector<typename WeightedAutomaton<K>::Edge>> g_by_letter(g.alphabet.size());
  for (const auto& e : g.edges) g_by_letter[e.letter].push_back(e);

  for (int q = 0; q < n.num_states(); ++q)
    for (int li = 0; li < n.num_letters(); ++li) {
      int t = n.next[q][li];
      if (t < 0) continue;
      Letter a(n.alphabet[li].begin(), n.alphabet[li].begin() + d);
      Letter coded = sigma(Letter(n.alphabet[li].begin() + d, n.alphabet[li].end()));
      int gi = g.letter_index(coded);
      require(gi >= 0, "star product: coded second block outside g's alphabet");
      int ai = pr.letter_index(a);
      for (const auto& e : g_by_letter[gi])
        pr.edges.push_back({q * sp.g_states + e.from, ai, t * sp.g_states + e.to, e.weight});
    }
  std::sort(pr.edges.begin(), pr.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.letter, x.to) < std::tie(y.from, y.letter, y.to);
  });
  return sp;
}

/* Padding lengths behind the extra state's out-row: entry [letter][state]
 * lists every l with a path labeled 0^l letter from (initial, initial) to
 * that product state.  The construction is only sound when each list has at
 * most one element (checked by `unique`); lists keep l = 0 too so the
 * uniqueness statement is the full one. */
struct AlphaTable {
  std::vector<Letter> letters;
  std::vector<std::vector<std::vector<int>>> paddings;
  bool unique = true;
};

template <class K>
AlphaTable compute_alpha_table(const StarProduct<K>& sp, int max_padding = -1) {
  require(sp.g_initial >= 0, "star product right factor needs a unique initial state");
  const auto& pr = sp.product;
  const int zero_li = pr.letter_index(zero_letter(pr.dim));
  require(zero_li >= 0, "product alphabet does not contain the zero letter");
  if (max_padding < 0) max_padding = 2 * pr.num_states + 1;

  std::vector<std::vector<const typename WeightedAutomaton<K>::Edge*>> by_letter(
      pr.alphabet.size());
  for (const auto& e : pr.edges) by_letter[e.letter].push_back(&e);

  /* reached[l] = states reachable from (i_N, i_G) by exactly l zero-edges */
  std::vector<std::vector<char>> reached;
  std::vector<char> cur(pr.num_states, 0);
  cur[sp.normalizer.initial * sp.g_states + sp.g_initial] = 1;
  reached.push_back(cur);
  for (int l = 1; l <= max_padding; ++l) {
    std::vector<char> nxt(pr.num_states, 0);
    for (const auto* e : by_letter[zero_li])
      if (cur[e->from]) nxt[e->to] = 1;
    reached.push_back(nxt);
    cur = std::move(nxt);
  }

  AlphaTable table;
  table.letters = pr.alphabet;
  table.paddings.assign(pr.alphabet.size(),
                        std::vector<std::vector<int>>(pr.num_states));
  for (std::size_t li = 0; li < pr.alphabet.size(); ++li)
    for (int l = 0; l <= max_padding; ++l)
      for (const auto* e : by_letter[li])
        if (reached[l][e->from]) {
          auto& ells = table.paddings[li][e->to];
          if (ells.empty() || ells.back() != l) ells.push_back(l);
          if (ells.size() > 1) table.unique = false;
        }
  return table;
}

/* Value-side automaton: the star product plus an extra initial-like state
 * alpha.  alpha carries the product's initial weight, has terminal weight
 * zero and no incoming edges.  Its out-row on letter a sums, over padding
 * lengths 1..(n_states * g_states), the product weights of 0^l a from
 * (i_N, i_G); additionally every normalizer move (q, (a, 0), q') yields a
 * weight-1 edge between the (., i_G) copies, which is what makes leading
 * zeros free on the value side.  State alpha is index 0, product state
 * (q, p) is 1 + q * g_states + p. */
template <class K>
WeightedAutomaton<K> build_av(const StarProduct<K>& sp) {
  using V = typename K::Value;
  const auto& pr = sp.product;
  const auto& n = sp.normalizer;
  require(sp.g_initial >= 0, "modification step needs g in initial normal form");
  {
    const int zero_gi = sp.g.letter_index(zero_letter(sp.g.dim));
    for (const auto& e : sp.g.edges) {
      require(e.to != sp.g_initial, "modification step needs g without edges into its initial state");
      require(!(e.from == sp.g_initial && e.letter == zero_gi),
              "modification step needs g without zero-letter edges out of its initial state");
    }
  }
  const int zero_li = pr.letter_index(zero_letter(pr.dim));
  require(zero_li >= 0, "modification step needs the zero letter in the alphabet");

  WeightedAutomaton<K> av;
  av.dim = pr.dim;
  av.alphabet = pr.alphabet;
  av.num_states = pr.num_states + 1;
  av.initial.assign(av.num_states, K::zero());
  av.final_weights.assign(av.num_states, K::zero());
  const int start = n.initial * sp.g_states + sp.g_initial;
  av.initial[0] = pr.initial[start];
  for (int q = 0; q < pr.num_states; ++q) {
    av.initial[q + 1] = pr.initial[q];
    av.final_weights[q + 1] = pr.final_weights[q];
  }
  for (const auto& e : pr.edges) av.edges.push_back({e.from + 1, e.letter, e.to + 1, e.weight});

  /* weight-1 edges between the g-initial copies along zero-second-block
   * normalizer moves; the normal form of g guarantees these slots are free */
  for (int q = 0; q < n.num_states(); ++q)
    for (int li = 0; li < n.num_letters(); ++li) {
      int t = n.next[q][li];
      if (t < 0) continue;
      Letter b(n.alphabet[li].begin() + sp.d, n.alphabet[li].end());
      if (!is_zero_letter(b)) continue;
      Letter a(n.alphabet[li].begin(), n.alphabet[li].begin() + sp.d);
      av.edges.push_back({1 + q * sp.g_states + sp.g_initial, av.letter_index(a),
                          1 + t * sp.g_states + sp.g_initial, K::one()});
    }

  /* alpha out-row: acc = sum_{l=1..num_states} e_start M(0)^l, then m(a) =
   * acc M(a), all with sparse row passes */
  std::vector<std::vector<const typename WeightedAutomaton<K>::Edge*>> by_letter(
      pr.alphabet.size());
  for (const auto& e : pr.edges) by_letter[e.letter].push_back(&e);
  std::vector<V> cur(pr.num_states, K::zero()), acc(pr.num_states, K::zero());
  cur[start] = K::one();
  for (int l = 1; l <= pr.num_states; ++l) {
    std::vector<V> nxt(pr.num_states, K::zero());
    for (const auto* e : by_letter[zero_li])
      if (!K::eq(cur[e->from], K::zero()))
        nxt[e->to] = K::add(nxt[e->to], K::mul(cur[e->from], e->weight));
    cur = nxt;
    for (int q = 0; q < pr.num_states; ++q) acc[q] = K::add(acc[q], nxt[q]);
  }
  for (std::size_t li = 0; li < pr.alphabet.size(); ++li) {
    std::vector<V> row(pr.num_states, K::zero());
    for (const auto* e : by_letter[li])
      if (!K::eq(acc[e->from], K::zero()))
        row[e->to] = K::add(row[e->to], K::mul(acc[e->from], e->weight));
    for (int q = 0; q < pr.num_states; ++q)
      if (!K::eq(row[q], K::zero())) av.edges.push_back({0, int(li), q + 1, row[q]});
  }
  std::sort(av.edges.begin(), av.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.letter, x.to) < std::tie(y.from, y.letter, y.to);
  });
  return av;
}

template <class K>
LinearRepresentation<K> alphabet_restrict_linrep(const LinearRepresentation<K>& s,
                                                 const std::vector<Letter>& sub);

struct ConversionReport {
  int g_dim = 0;              // r, dimension of the greedy-indexed input
  int normalizer_states = 0;  // s
  int dim_untrimmed = 0;      // r*s + 1
  int dim_trimmed = 0;
  bool zero_adjoined = false;
  bool trimmed = true;
  bool paddings_unique = true;
  /* letter -> per product state, padding lengths >= 1 feeding the alpha row */
  std::vector<std::pair<Letter, std::vector<std::vector<int>>>> padding_table;
};

/* Greedy-indexed to value-indexed conversion: given g with coefficients
 * g(rep(n)) = f(n) (and zero off the representation language), returns a
 * representation whose coefficient on every word w over `alphabet` is
 * f(value(w)).  The zero letter is adjoined for the construction and the
 * result restricted back when it was not asked for. */
template <class K>
std::pair<LinearRepresentation<K>, ConversionReport> greedy_to_value_linrep(
    const LinearRepresentation<K>& g, const SystemTuple& systems,
    const std::vector<Letter>& alphabet, bool trim_result = true, bool assume_pisot = false) {
  g.check_well_formed();
  require(!systems.empty(), "conversion needs at least one numeration system");
  const int d = int(systems.size());
  require(g.dim == d, "conversion: series letter width differs from system count");
  {
    std::vector<std::vector<int>> tracks;
    for (const auto& ns : systems) tracks.push_back(ns.digit_alphabet());
    for (const auto& l : cartesian_letters(tracks))
      require(g.letter_index(l) >= 0,
              "conversion: series must be defined on the full canonical digit alphabet");
  }

  ConversionReport report;
  std::vector<Letter> full = sorted_alphabet(alphabet);
  const Letter zero = zero_letter(d);
  if (std::find(full.begin(), full.end(), zero) == full.end()) {
    full.push_back(zero);
    full = sorted_alphabet(std::move(full));
    report.zero_adjoined = true;
  }

  MultiTapeDFA n = build_multidim_normalizer(systems, full, assume_pisot);
  WeightedAutomaton<K> gw = initial_normal_form(linrep_to_wfa(g));
  StarProduct<K> sp = star_product(n, gw);

  AlphaTable table = compute_alpha_table(sp);
  report.paddings_unique = table.unique;
  for (std::size_t li = 0; li < table.letters.size(); ++li) {
    std::vector<std::vector<int>> positive(table.paddings[li].size());
    for (std::size_t q = 0; q < table.paddings[li].size(); ++q)
      for (int l : table.paddings[li][q])
        if (l >= 1) positive[q].push_back(l);
    report.padding_table.emplace_back(table.letters[li], std::move(positive));
  }

  WeightedAutomaton<K> av = build_av(sp);
  report.g_dim = sp.g_states;
  report.normalizer_states = sp.n_states;
  report.dim_untrimmed = av.num_states;
  report.trimmed = trim_result;
  if (trim_result) av = trim_wfa(av);
  report.dim_trimmed = av.num_states;

  LinearRepresentation<K> out = wfa_to_linrep(av);
  {
    /* align to exactly the requested alphabet: drop the adjoined zero and
     * any letter the normalizer kept alive beyond the request; a requested
     * letter with no live move anywhere gets the all-zero matrix */
    LinearRepresentation<K> aligned;
    aligned.dim = out.dim;
    aligned.r = out.r;
    aligned.alphabet = sorted_alphabet(alphabet);
    aligned.lambda = out.lambda;
    aligned.gamma = out.gamma;
    for (const auto& l : aligned.alphabet) {
      int li = out.letter_index(l);
      aligned.mu.push_back(li >= 0 ? out.mu[li] : Matrix<K>(out.r, out.r));
    }
    out = std::move(aligned);
  }
  return {out, report};
}

template <class K>
LinearRepresentation<K> alphabet_restrict_linrep(const LinearRepresentation<K>& s,
                                                 const std::vector<Letter>& sub) {
  LinearRepresentation<K> r;
  r.dim = s.dim;
  r.r = s.r;
  r.alphabet = sorted_alphabet(sub);
  r.lambda = s.lambda;
  r.gamma = s.gamma;
  for (const auto& l : r.alphabet) {
    int li = s.letter_index(l);
    require(li >= 0, "alphabet restriction: letter not present in the representation");
    r.mu.push_back(s.mu[li]);
  }
  return r;
}

/* Value-indexed to greedy-indexed: zero the coefficients off the padded
 * representation language.  The result agrees with s on rep(N^d) and
 * vanishes elsewhere, which is the greedy-indexed form of the same map. */
template <class K>
LinearRepresentation<K> value_to_greedy_linrep(const LinearRepresentation<K>& s,
                                               const SystemTuple& systems) {
  s.check_well_formed();
  require(int(systems.size()) == s.dim, "conversion: series letter width differs from system count");
  return restrict_to_language(s, rep_language_dfa(systems));
}

}  // namespace pisot
