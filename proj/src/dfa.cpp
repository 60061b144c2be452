#include "pisot/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pisot {

int MultiTapeDFA::letter_index(const Letter& l) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), l);
  if (it == alphabet.end() || *it != l) return -1;
  return int(it - alphabet.begin());
}

bool MultiTapeDFA::accepts(const Word& w) const {
  require(w.dim == dim, "accepts: word dimension differs from automaton");
  int q = initial;
  for (const auto& l : w.letters) {
    int li = letter_index(l);
    if (li < 0) return false;
    q = next[q][li];
    if (q < 0) return false;
  }
  return is_final[q] != 0;
}

void MultiTapeDFA::check_well_formed() const {
  require(dim >= 1, "automaton dimension must be >= 1");
  require(std::is_sorted(alphabet.begin(), alphabet.end()) &&
              std::adjacent_find(alphabet.begin(), alphabet.end()) == alphabet.end(),
          "alphabet must be sorted and duplicate-free");
  for (const auto& l : alphabet)
    require(int(l.size()) == dim, "alphabet letter width differs from automaton dimension");
  require(num_states() >= 1, "automaton needs at least one state");
  require(initial >= 0 && initial < num_states(), "initial state out of range");
  require(int(is_final.size()) == num_states(), "finals size mismatch");
  for (const auto& row : next) {
    require(int(row.size()) == num_letters(), "transition row width mismatch");
    for (int t : row) require(t >= -1 && t < num_states(), "transition target out of range");
  }
}

MultiTapeDFA make_empty_dfa(int dim, std::vector<Letter> alphabet) {
  MultiTapeDFA a;
  a.dim = dim;
  a.alphabet = sorted_alphabet(std::move(alphabet));
  a.initial = 0;
  a.is_final = {0};
  a.next = {std::vector<int>(a.alphabet.size(), -1)};
  return a;
}

std::vector<Letter> sorted_alphabet(std::vector<Letter> letters) {
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

std::vector<Letter> merge_alphabets(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::vector<Letter> m = a;
  m.insert(m.end(), b.begin(), b.end());
  return sorted_alphabet(std::move(m));
}

MultiTapeDFA bfs_canonical(const MultiTapeDFA& a) {
  std::vector<int> id(a.num_states(), -1);
  std::deque<int> queue;
  std::vector<int> order;
  id[a.initial] = 0;
  queue.push_back(a.initial);
  order.push_back(a.initial);
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int li = 0; li < a.num_letters(); ++li) {
      int t = a.next[q][li];
      if (t >= 0 && id[t] < 0) {
        id[t] = int(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  MultiTapeDFA r;
  r.dim = a.dim;
  r.tape_split = a.tape_split;
  r.alphabet = a.alphabet;
  r.initial = 0;
  r.is_final.resize(order.size());
  r.next.assign(order.size(), std::vector<int>(a.num_letters(), -1));
  for (std::size_t i = 0; i < order.size(); ++i) {
    r.is_final[i] = a.is_final[order[i]];
    for (int li = 0; li < a.num_letters(); ++li) {
      int t = a.next[order[i]][li];
      if (t >= 0 && id[t] >= 0) r.next[i][li] = id[t];
    }
  }
  return r;
}

MultiTapeDFA trim(const MultiTapeDFA& a) {
  const int n = a.num_states();
  std::vector<char> accessible(n, 0);
  {
    std::deque<int> queue{a.initial};
    accessible[a.initial] = 1;
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int t : a.next[q])
        if (t >= 0 && !accessible[t]) {
          accessible[t] = 1;
          queue.push_back(t);
        }
    }
  }
  std::vector<char> coaccessible(n, 0);
  {
    std::vector<std::vector<int>> rev(n);
    for (int q = 0; q < n; ++q)
      for (int t : a.next[q])
        if (t >= 0) rev[t].push_back(q);
    std::deque<int> queue;
    for (int q = 0; q < n; ++q)
      if (a.is_final[q]) {
        coaccessible[q] = 1;
        queue.push_back(q);
      }
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int p : rev[q])
        if (!coaccessible[p]) {
          coaccessible[p] = 1;
          queue.push_back(p);
        }
    }
  }
  if (!(accessible[a.initial] && coaccessible[a.initial])) {
    MultiTapeDFA e = make_empty_dfa(a.dim, a.alphabet);
    e.tape_split = a.tape_split;
    return e;
  }
  MultiTapeDFA cut = a;
  for (int q = 0; q < n; ++q)
    for (int& t : cut.next[q])
      if (t >= 0 && !(accessible[t] && coaccessible[t])) t = -1;
  return bfs_canonical(cut);
}

MultiTapeDFA minimize(const MultiTapeDFA& a) {
  const int n = a.num_states();
  const int letters = a.num_letters();
  const int dead = n;  // implicit sink completing the automaton

  std::vector<int> cls(n + 1);
  for (int q = 0; q < n; ++q) cls[q] = a.is_final[q] ? 1 : 0;
  cls[dead] = 0;

  auto target = [&](int q, int li) { return q == dead ? dead : (a.next[q][li] < 0 ? dead : a.next[q][li]); };

  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> fresh(n + 1);
    std::vector<int> sig(letters + 1);
    for (int q = 0; q <= n; ++q) {
      sig[0] = cls[q];
      for (int li = 0; li < letters; ++li) sig[li + 1] = cls[target(q, li)];
      auto [it, inserted] = sig_ids.emplace(sig, int(sig_ids.size()));
      fresh[q] = it->second;
    }
    if (fresh == cls) break;
    cls = fresh;
  }

  if (cls[a.initial] == cls[dead]) {
    MultiTapeDFA e = make_empty_dfa(a.dim, a.alphabet);
    e.tape_split = a.tape_split;
    return e;
  }

  int num_classes = *std::max_element(cls.begin(), cls.end()) + 1;
  MultiTapeDFA q;
  q.dim = a.dim;
  q.tape_split = a.tape_split;
  q.alphabet = a.alphabet;
  q.initial = cls[a.initial];
  q.is_final.assign(num_classes, 0);
  q.next.assign(num_classes, std::vector<int>(letters, -1));
  for (int s = 0; s < n; ++s) {
    if (a.is_final[s]) q.is_final[cls[s]] = 1;
    for (int li = 0; li < letters; ++li) {
      int t = target(s, li);
      if (cls[t] != cls[dead]) q.next[cls[s]][li] = cls[t];
    }
  }
  /* The dead class and classes unreachable from the initial one disappear
   * during BFS re-indexing (no transition ever enters the dead class). */
  return bfs_canonical(q);
}

MultiTapeDFA intersect(const MultiTapeDFA& a, const MultiTapeDFA& b) {
  require(a.dim == b.dim, "intersect: automata dimensions differ");
  MultiTapeDFA r;
  r.dim = a.dim;
  r.tape_split = a.tape_split == b.tape_split ? a.tape_split : 0;
  r.alphabet = merge_alphabets(a.alphabet, b.alphabet);

  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto state = [&](int qa, int qb) {
    auto [it, inserted] = id.emplace(std::make_pair(qa, qb), int(id.size()));
    if (inserted) {
      queue.emplace_back(qa, qb);
      r.is_final.push_back(a.is_final[qa] && b.is_final[qb]);
      r.next.emplace_back(r.alphabet.size(), -1);
    }
    return it->second;
  };
  state(a.initial, b.initial);
  while (!queue.empty()) {
    auto [qa, qb] = queue.front();
    queue.pop_front();
    int from = id[{qa, qb}];
    for (std::size_t li = 0; li < r.alphabet.size(); ++li) {
      int ia = a.letter_index(r.alphabet[li]);
      int ib = b.letter_index(r.alphabet[li]);
      if (ia < 0 || ib < 0) continue;
      int ta = a.next[qa][ia], tb = b.next[qb][ib];
      if (ta < 0 || tb < 0) continue;
      r.next[from][li] = state(ta, tb);
    }
  }
  r.initial = 0;
  return r;
}

MultiTapeDFA union_dfa(const MultiTapeDFA& a, const MultiTapeDFA& b) {
  require(a.dim == b.dim, "union: automata dimensions differ");
  MultiTapeDFA r;
  r.dim = a.dim;
  r.tape_split = a.tape_split == b.tape_split ? a.tape_split : 0;
  r.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  const int dead_a = a.num_states(), dead_b = b.num_states();

  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto state = [&](int qa, int qb) {
    auto [it, inserted] = id.emplace(std::make_pair(qa, qb), int(id.size()));
    if (inserted) {
      queue.emplace_back(qa, qb);
      bool fa = qa != dead_a && a.is_final[qa];
      bool fb = qb != dead_b && b.is_final[qb];
      r.is_final.push_back(fa || fb);
      r.next.emplace_back(r.alphabet.size(), -1);
    }
    return it->second;
  };
  state(a.initial, b.initial);
  while (!queue.empty()) {
    auto [qa, qb] = queue.front();
    queue.pop_front();
    int from = id[{qa, qb}];
    for (std::size_t li = 0; li < r.alphabet.size(); ++li) {
      int ia = a.letter_index(r.alphabet[li]);
      int ib = b.letter_index(r.alphabet[li]);
      int ta = (qa == dead_a || ia < 0) ? dead_a : (a.next[qa][ia] < 0 ? dead_a : a.next[qa][ia]);
      int tb = (qb == dead_b || ib < 0) ? dead_b : (b.next[qb][ib] < 0 ? dead_b : b.next[qb][ib]);
      if (ta == dead_a && tb == dead_b) continue;  // keep the product partial
      r.next[from][li] = state(ta, tb);
    }
  }
  r.initial = 0;
  return r;
}

MultiTapeDFA tensor(const std::vector<MultiTapeDFA>& parts) {
  require(!parts.empty(), "tensor: empty part list");
  const int d = int(parts.size());
  for (const auto& p : parts)
    require(p.dim == 2, "tensor: every part must read one track pair");

  MultiTapeDFA r;
  r.dim = 2 * d;
  r.tape_split = d;

  /* Cartesian product of the part alphabets; entry j of the combo feeds
   * output positions j (first block) and d+j (second block). */
  std::vector<std::vector<int>> combos;  // letter index per part
  {
    std::vector<int> cur(d, 0);
    for (;;) {
      combos.push_back(cur);
      int j = d - 1;
      while (j >= 0 && ++cur[j] == parts[j].num_letters()) cur[j--] = 0;
      if (j < 0) break;
    }
  }
  std::vector<Letter> combo_letters;
  for (const auto& combo : combos) {
    Letter l(2 * d);
    for (int j = 0; j < d; ++j) {
      l[j] = parts[j].alphabet[combo[j]][0];
      l[d + j] = parts[j].alphabet[combo[j]][1];
    }
    combo_letters.push_back(l);
  }
  r.alphabet = sorted_alphabet(combo_letters);

  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> queue;
  auto state = [&](const std::vector<int>& qs) {
    auto [it, inserted] = id.emplace(qs, int(id.size()));
    if (inserted) {
      queue.push_back(qs);
      bool fin = true;
      for (int j = 0; j < d; ++j) fin = fin && parts[j].is_final[qs[j]];
      r.is_final.push_back(fin);
      r.next.emplace_back(r.alphabet.size(), -1);
    }
    return it->second;
  };
  std::vector<int> init(d);
  for (int j = 0; j < d; ++j) init[j] = parts[j].initial;
  state(init);
  while (!queue.empty()) {
    std::vector<int> qs = queue.front();
    queue.pop_front();
    int from = id[qs];
    for (std::size_t c = 0; c < combos.size(); ++c) {
      std::vector<int> ts(d);
      bool ok = true;
      for (int j = 0; j < d && ok; ++j) {
        ts[j] = parts[j].next[qs[j]][combos[c][j]];
        ok = ts[j] >= 0;
      }
      if (!ok) continue;
      r.next[from][r.letter_index(combo_letters[c])] = state(ts);
    }
  }
  r.initial = 0;
  return r;
}

MultiTapeDFA mirror_negate(const MultiTapeDFA& a) {
  MultiTapeDFA r;
  r.dim = a.dim;
  r.tape_split = a.tape_split;
  std::vector<Letter> negated;
  for (const auto& l : a.alphabet) negated.push_back(negate_letter(l));
  r.alphabet = sorted_alphabet(negated);
  r.initial = a.initial;
  r.is_final = a.is_final;
  r.next.assign(a.num_states(), std::vector<int>(r.alphabet.size(), -1));
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] >= 0)
        r.next[q][r.letter_index(negate_letter(a.alphabet[li]))] = a.next[q][li];
  return bfs_canonical(r);
}

MultiTapeDFA filter_first_component(const MultiTapeDFA& a, const std::vector<Letter>& keep,
                                    int first_dim) {
  require(first_dim >= 1 && first_dim <= a.dim, "filter: first block width out of range");
  std::set<Letter> keep_set;
  for (const auto& l : keep) {
    require(int(l.size()) == first_dim, "filter: keep letter width mismatch");
    keep_set.insert(l);
  }
  MultiTapeDFA r = a;
  for (int li = 0; li < a.num_letters(); ++li) {
    Letter prefix(a.alphabet[li].begin(), a.alphabet[li].begin() + first_dim);
    if (keep_set.count(prefix)) continue;
    for (int q = 0; q < r.num_states(); ++q) r.next[q][li] = -1;
  }
  return bfs_canonical(r);
}

MultiTapeDFA diagonal_projection(const MultiTapeDFA& a) {
  require(a.dim % 2 == 0, "diagonal projection needs a pair automaton");
  const int k = a.dim / 2;
  MultiTapeDFA r;
  r.dim = k;
  r.tape_split = 0;
  std::vector<Letter> diag;
  std::vector<int> source;  // pair-letter index per diagonal letter
  for (int li = 0; li < a.num_letters(); ++li) {
    const Letter& l = a.alphabet[li];
    bool on_diag = std::equal(l.begin(), l.begin() + k, l.begin() + k);
    if (!on_diag) continue;
    diag.push_back(Letter(l.begin(), l.begin() + k));
    source.push_back(li);
  }
  r.alphabet = diag;  // already sorted: prefix order of a sorted list
  r.initial = a.initial;
  r.is_final = a.is_final;
  r.next.assign(a.num_states(), std::vector<int>(diag.size(), -1));
  for (int q = 0; q < a.num_states(); ++q)
    for (std::size_t j = 0; j < diag.size(); ++j) r.next[q][j] = a.next[q][source[j]];
  return bfs_canonical(r);
}

namespace {

MultiTapeDFA widen_alphabet(const MultiTapeDFA& a, const std::vector<Letter>& alphabet) {
  MultiTapeDFA r = a;
  r.alphabet = alphabet;
  r.next.assign(a.num_states(), std::vector<int>(alphabet.size(), -1));
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] >= 0) r.next[q][r.letter_index(a.alphabet[li])] = a.next[q][li];
  return r;
}

}  // namespace

bool language_equal(const MultiTapeDFA& a, const MultiTapeDFA& b) {
  if (a.dim != b.dim) return false;
  std::vector<Letter> alphabet = merge_alphabets(a.alphabet, b.alphabet);
  MultiTapeDFA ma = minimize(widen_alphabet(a, alphabet));
  MultiTapeDFA mb = minimize(widen_alphabet(b, alphabet));
  return ma.num_states() == mb.num_states() && ma.is_final == mb.is_final && ma.next == mb.next;
}

MultiTapeDFA determinize(const NFA& a) {
  MultiTapeDFA r;
  r.dim = a.dim;
  r.alphabet = a.alphabet;

  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> queue;
  auto state = [&](const std::vector<int>& subset) {
    auto [it, inserted] = id.emplace(subset, int(id.size()));
    if (inserted) {
      queue.push_back(subset);
      bool fin = false;
      for (int q : subset) fin = fin || a.is_final[q];
      r.is_final.push_back(fin);
      r.next.emplace_back(a.alphabet.size(), -1);
    }
    return it->second;
  };
  state(std::vector<int>(a.initials.begin(), a.initials.end()));
  while (!queue.empty()) {
    std::vector<int> subset = queue.front();
    queue.pop_front();
    int from = id[subset];
    for (std::size_t li = 0; li < a.alphabet.size(); ++li) {
      std::set<int> targets;
      for (int q : subset)
        for (int t : a.next[q][li]) targets.insert(t);
      r.next[from][li] = state(std::vector<int>(targets.begin(), targets.end()));
    }
  }
  r.initial = 0;
  return r;
}

MultiTapeDFA complement(const MultiTapeDFA& a) {
  MultiTapeDFA r = a;
  bool needs_sink = false;
  for (const auto& row : r.next)
    for (int t : row)
      if (t < 0) needs_sink = true;
  if (needs_sink) {
    int sink = r.num_states();
    r.is_final.push_back(0);
    r.next.emplace_back(r.num_letters(), sink);
    for (auto& row : r.next)
      for (int& t : row)
        if (t < 0) t = sink;
  }
  for (auto& f : r.is_final) f = !f;
  return r;
}

NFA project_first(const MultiTapeDFA& a, int first_dim) {
  require(first_dim >= 1 && first_dim < a.dim, "project: first block width out of range");
  NFA r;
  r.dim = first_dim;
  std::vector<Letter> prefixes;
  for (const auto& l : a.alphabet) prefixes.push_back(Letter(l.begin(), l.begin() + first_dim));
  r.alphabet = sorted_alphabet(prefixes);
  r.initials = {a.initial};
  r.is_final.assign(a.is_final.begin(), a.is_final.end());
  r.next.assign(a.num_states(), std::vector<std::vector<int>>(r.alphabet.size()));
  for (int q = 0; q < a.num_states(); ++q)
    for (int li = 0; li < a.num_letters(); ++li)
      if (a.next[q][li] >= 0) {
        Letter prefix(a.alphabet[li].begin(), a.alphabet[li].begin() + first_dim);
        int pi = int(std::lower_bound(r.alphabet.begin(), r.alphabet.end(), prefix) -
                     r.alphabet.begin());
        r.next[q][pi].push_back(a.next[q][li]);
      }
  return r;
}

}  // namespace pisot
