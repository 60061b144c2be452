#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "pisot/dfa.hpp"
#include "pisot/semiring.hpp"
#include "pisot/words.hpp"

namespace pisot {

/* Weighted automaton over semiring K with letters in Z^dim.  Zero-weight
 * edges are never stored.  Initial/final weight vectors I and T live per
 * state; the weight of a word is the usual sum over paths of
 * I(start) * edge weights * T(end). */
template <class K>
struct WeightedAutomaton {
  using Value = typename K::Value;

  struct Edge {
    int from = 0;
    int letter = 0;  // index into alphabet
    int to = 0;
    Value weight = K::zero();
  };

  int dim = 1;
  std::vector<Letter> alphabet;  // sorted, duplicate-free
  int num_states = 0;
  std::vector<Value> initial;        // I
  std::vector<Value> final_weights;  // T
  std::vector<Edge> edges;

  int letter_index(const Letter& l) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), l);
    if (it == alphabet.end() || *it != l) return -1;
    return int(it - alphabet.begin());
  }

  void check_well_formed() const {
    require(dim >= 1, "weighted automaton dimension must be >= 1");
    require(std::is_sorted(alphabet.begin(), alphabet.end()) &&
                std::adjacent_find(alphabet.begin(), alphabet.end()) == alphabet.end(),
            "alphabet must be sorted and duplicate-free");
    require(int(initial.size()) == num_states && int(final_weights.size()) == num_states,
            "initial/final weight vectors must have one entry per state");
    for (const auto& e : edges) {
      require(e.from >= 0 && e.from < num_states && e.to >= 0 && e.to < num_states,
              "edge endpoint out of range");
      require(e.letter >= 0 && e.letter < int(alphabet.size()), "edge letter out of range");
      require(!K::eq(e.weight, K::zero()), "zero-weight edge stored");
    }
  }
};

template <class K>
typename K::Value weight_of_word(const WeightedAutomaton<K>& a, const Word& w) {
  require(w.dim == a.dim, "weight_of_word: word dimension differs from automaton");
  using V = typename K::Value;
  /* edges grouped by letter, then one row-vector pass per letter read */
  std::vector<std::vector<const typename WeightedAutomaton<K>::Edge*>> by_letter(a.alphabet.size());
  for (const auto& e : a.edges) by_letter[e.letter].push_back(&e);

  std::vector<V> row = a.initial;
  for (const auto& l : w.letters) {
    int li = a.letter_index(l);
    require(li >= 0, "weight_of_word: letter outside the automaton alphabet");
    std::vector<V> next(a.num_states, K::zero());
    for (const auto* e : by_letter[li])
      if (!K::eq(row[e->from], K::zero()))
        next[e->to] = K::add(next[e->to], K::mul(row[e->from], e->weight));
    row = std::move(next);
  }
  V out = K::zero();
  for (int q = 0; q < a.num_states; ++q) out = K::add(out, K::mul(row[q], a.final_weights[q]));
  return out;
}

/* Linear representation (lambda, mu, gamma): the series coefficient of w is
 * lambda * mu(w_1) * ... * mu(w_n) * gamma.  mu is aligned with alphabet. */
template <class K>
struct LinearRepresentation {
  int dim = 1;  // letter width
  int r = 0;    // representation dimension
  std::vector<Letter> alphabet;
  Matrix<K> lambda;             // 1 x r
  std::vector<Matrix<K>> mu;    // one r x r matrix per alphabet letter
  Matrix<K> gamma;              // r x 1

  int letter_index(const Letter& l) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), l);
    if (it == alphabet.end() || *it != l) return -1;
    return int(it - alphabet.begin());
  }

  const Matrix<K>& mu_of(const Letter& l) const {
    int li = letter_index(l);
    require(li >= 0, "letter outside the representation alphabet");
    return mu[li];
  }

  void check_well_formed() const {
    require(r >= 1, "representation dimension must be >= 1");
    require(std::is_sorted(alphabet.begin(), alphabet.end()) &&
                std::adjacent_find(alphabet.begin(), alphabet.end()) == alphabet.end(),
            "alphabet must be sorted and duplicate-free");
    require(lambda.rows == 1 && lambda.cols == r, "lambda must be 1 x r");
    require(gamma.rows == r && gamma.cols == 1, "gamma must be r x 1");
    require(mu.size() == alphabet.size(), "one mu matrix per letter required");
    for (const auto& m : mu) require(m.rows == r && m.cols == r, "mu matrices must be r x r");
  }
};

template <class K>
typename K::Value linrep_eval(const LinearRepresentation<K>& rep, const Word& w) {
  require(w.dim == rep.dim, "linrep_eval: word dimension differs from representation");
  Matrix<K> row = rep.lambda;
  for (const auto& l : w.letters) row = mat_mul(row, rep.mu_of(l));
  return mat_mul(row, rep.gamma).at(0, 0);
}

template <class K>
LinearRepresentation<K> wfa_to_linrep(const WeightedAutomaton<K>& a) {
  require(a.num_states >= 1, "cannot linearize an automaton with no states");
  LinearRepresentation<K> rep;
  rep.dim = a.dim;
  rep.r = a.num_states;
  rep.alphabet = a.alphabet;
  rep.lambda = Matrix<K>(1, rep.r);
  rep.gamma = Matrix<K>(rep.r, 1);
  for (int q = 0; q < rep.r; ++q) {
    rep.lambda.at(0, q) = a.initial[q];
    rep.gamma.at(q, 0) = a.final_weights[q];
  }
  rep.mu.assign(rep.alphabet.size(), Matrix<K>(rep.r, rep.r));
  for (const auto& e : a.edges)
    rep.mu[e.letter].at(e.from, e.to) = K::add(rep.mu[e.letter].at(e.from, e.to), e.weight);
  return rep;
}

template <class K>
WeightedAutomaton<K> linrep_to_wfa(const LinearRepresentation<K>& rep) {
  require(rep.r >= 1, "cannot build an automaton from a 0-dimensional representation");
  WeightedAutomaton<K> a;
  a.dim = rep.dim;
  a.alphabet = rep.alphabet;
  a.num_states = rep.r;
  a.initial.resize(rep.r);
  a.final_weights.resize(rep.r);
  for (int q = 0; q < rep.r; ++q) {
    a.initial[q] = rep.lambda.at(0, q);
    a.final_weights[q] = rep.gamma.at(q, 0);
  }
  for (std::size_t li = 0; li < rep.mu.size(); ++li)
    for (int i = 0; i < rep.r; ++i)
      for (int j = 0; j < rep.r; ++j)
        if (!K::eq(rep.mu[li].at(i, j), K::zero()))
          a.edges.push_back({i, int(li), j, rep.mu[li].at(i, j)});
  return a;
}

/* Pointwise (Hadamard) product via the Kronecker construction. */
template <class K>
LinearRepresentation<K> hadamard(const LinearRepresentation<K>& s,
                                 const LinearRepresentation<K>& t) {
  require(s.dim == t.dim, "hadamard: letter dimensions differ");
  require(s.alphabet == t.alphabet, "hadamard: alphabets differ");
  LinearRepresentation<K> h;
  h.dim = s.dim;
  h.r = s.r * t.r;
  h.alphabet = s.alphabet;

  auto kron = [&](const Matrix<K>& x, const Matrix<K>& y) {
    Matrix<K> z(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) {
        if (K::eq(x.at(i, j), K::zero())) continue;
        for (int p = 0; p < y.rows; ++p)
          for (int q = 0; q < y.cols; ++q)
            z.at(i * y.rows + p, j * y.cols + q) = K::mul(x.at(i, j), y.at(p, q));
      }
    return z;
  };
  h.lambda = kron(s.lambda, t.lambda);
  h.gamma = kron(s.gamma, t.gamma);
  for (std::size_t li = 0; li < s.mu.size(); ++li) h.mu.push_back(kron(s.mu[li], t.mu[li]));
  return h;
}

/* 0/1 representation of the characteristic series of a partial DFA, laid out
 * over the given alphabet (letters the automaton does not know get the zero
 * matrix: it rejects anything containing them). */
template <class K>
LinearRepresentation<K> characteristic_linrep(const MultiTapeDFA& dfa,
                                              const std::vector<Letter>& alphabet) {
  LinearRepresentation<K> rep;
  rep.dim = dfa.dim;
  rep.r = dfa.num_states();
  rep.alphabet = alphabet;
  rep.lambda = Matrix<K>(1, rep.r);
  rep.lambda.at(0, dfa.initial) = K::one();
  rep.gamma = Matrix<K>(rep.r, 1);
  for (int q = 0; q < rep.r; ++q)
    if (dfa.is_final[q]) rep.gamma.at(q, 0) = K::one();
  rep.mu.assign(alphabet.size(), Matrix<K>(rep.r, rep.r));
  for (std::size_t li = 0; li < alphabet.size(); ++li) {
    int di = dfa.letter_index(alphabet[li]);
    if (di < 0) continue;
    for (int q = 0; q < rep.r; ++q)
      if (dfa.next[q][di] >= 0) rep.mu[li].at(q, dfa.next[q][di]) = K::one();
  }
  return rep;
}

/* Pointwise product with the characteristic series of dfa: keeps the
 * coefficients on L(dfa), zeroes everything else. */
template <class K>
LinearRepresentation<K> restrict_to_language(const LinearRepresentation<K>& s,
                                             const MultiTapeDFA& dfa) {
  require(s.dim == dfa.dim, "restrict: letter dimensions differ");
  return hadamard(s, characteristic_linrep<K>(dfa, s.alphabet));
}

/* Rebuild the automaton so that exactly one state carries a nonzero initial
 * weight (namely 1), that state has no incoming edge and no outgoing edge
 * labeled by the all-zero letter.  Sound for series with zero coefficients on
 * words starting with the zero letter; returns the input unchanged when it
 * already has the shape. */
template <class K>
WeightedAutomaton<K> initial_normal_form(const WeightedAutomaton<K>& a) {
  using V = typename K::Value;
  require(a.num_states >= 1, "initial normal form of an empty automaton");
  const Letter zero = zero_letter(a.dim);
  const int zero_li = a.letter_index(zero);

  int nonzero_initials = 0, init_state = -1;
  for (int q = 0; q < a.num_states; ++q)
    if (!K::eq(a.initial[q], K::zero())) {
      ++nonzero_initials;
      init_state = q;
    }
  if (nonzero_initials == 1) {
    bool clean = true;
    for (const auto& e : a.edges) {
      if (e.to == init_state) clean = false;
      if (e.from == init_state && e.letter == zero_li) clean = false;
    }
    if (clean) return a;
  }

  WeightedAutomaton<K> r;
  r.dim = a.dim;
  r.alphabet = a.alphabet;
  r.num_states = a.num_states + 1;
  r.initial.assign(r.num_states, K::zero());
  r.initial[0] = K::one();
  r.final_weights.assign(r.num_states, K::zero());
  V t0 = K::zero();
  for (int q = 0; q < a.num_states; ++q) {
    t0 = K::add(t0, K::mul(a.initial[q], a.final_weights[q]));
    r.final_weights[q + 1] = a.final_weights[q];
  }
  r.final_weights[0] = t0;
  for (const auto& e : a.edges) r.edges.push_back({e.from + 1, e.letter, e.to + 1, e.weight});

  /* Out-edges of the fresh initial state aggregate the old initial weights;
   * zero-letter ones are dropped, which is exactly the normal form's pruning. */
  std::map<std::pair<int, int>, V> fresh;  // (letter, to) -> weight
  for (const auto& e : a.edges) {
    if (e.letter == zero_li) continue;
    if (K::eq(a.initial[e.from], K::zero())) continue;
    auto key = std::make_pair(e.letter, e.to + 1);
    auto [it, inserted] = fresh.emplace(key, K::zero());
    it->second = K::add(it->second, K::mul(a.initial[e.from], e.weight));
  }
  for (const auto& [key, w] : fresh)
    if (!K::eq(w, K::zero())) r.edges.push_back({0, key.first, key.second, w});
  std::sort(r.edges.begin(), r.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.letter, x.to) < std::tie(y.from, y.letter, y.to);
  });
  return r;
}

/* Drop states that are not both reachable from a nonzero-I state and
 * co-reachable to a nonzero-T state; re-index survivors in BFS discovery
 * order.  Coefficients are unchanged. */
template <class K>
WeightedAutomaton<K> trim_wfa(const WeightedAutomaton<K>& a) {
  std::vector<std::vector<int>> fwd(a.num_states), bwd(a.num_states);
  for (const auto& e : a.edges) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  auto reach = [&](std::vector<char>& mark, const std::vector<std::vector<int>>& adj) {
    std::vector<int> queue;
    for (int q = 0; q < a.num_states; ++q)
      if (mark[q]) queue.push_back(q);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int t : adj[queue[h]])
        if (!mark[t]) {
          mark[t] = 1;
          queue.push_back(t);
        }
  };
  std::vector<char> acc(a.num_states, 0), coacc(a.num_states, 0);
  for (int q = 0; q < a.num_states; ++q) {
    if (!K::eq(a.initial[q], K::zero())) acc[q] = 1;
    if (!K::eq(a.final_weights[q], K::zero())) coacc[q] = 1;
  }
  reach(acc, fwd);
  reach(coacc, bwd);

  std::vector<char> keep(a.num_states);
  for (int q = 0; q < a.num_states; ++q) keep[q] = acc[q] && coacc[q];

  /* BFS order over kept states, seeds in ascending state index, edges sorted
   * by (letter, to) for a deterministic layout. */
  std::vector<std::vector<std::pair<int, int>>> out(a.num_states);  // (letter, to)
  for (const auto& e : a.edges)
    if (keep[e.from] && keep[e.to]) out[e.from].emplace_back(e.letter, e.to);
  for (auto& v : out) std::sort(v.begin(), v.end());

  std::vector<int> id(a.num_states, -1), order;
  for (int q = 0; q < a.num_states; ++q)
    if (keep[q] && !K::eq(a.initial[q], K::zero()) && id[q] < 0) {
      id[q] = int(order.size());
      order.push_back(q);
    }
  for (std::size_t h = 0; h < order.size(); ++h)
    for (auto [li, t] : out[order[h]])
      if (id[t] < 0) {
        id[t] = int(order.size());
        order.push_back(t);
      }

  WeightedAutomaton<K> r;
  r.dim = a.dim;
  r.alphabet = a.alphabet;
  r.num_states = int(order.size());
  r.initial.resize(r.num_states);
  r.final_weights.resize(r.num_states);
  for (std::size_t i = 0; i < order.size(); ++i) {
    r.initial[i] = a.initial[order[i]];
    r.final_weights[i] = a.final_weights[order[i]];
  }
  for (const auto& e : a.edges)
    if (keep[e.from] && keep[e.to] && id[e.from] >= 0 && id[e.to] >= 0)
      r.edges.push_back({id[e.from], e.letter, id[e.to], e.weight});
  std::sort(r.edges.begin(), r.edges.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.letter, x.to) < std::tie(y.from, y.letter, y.to);
  });
  return r;
}

}  // namespace pisot
