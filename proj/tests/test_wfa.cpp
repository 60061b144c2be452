#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pisot/fixtures.hpp"
#include "pisot/wfa.hpp"
#include "pisot/words.hpp"

using namespace pisot;

namespace {

template <class K>
void check_same_series(const LinearRepresentation<K>& x, const LinearRepresentation<K>& y,
                       int max_len) {
  REQUIRE(x.alphabet == y.alphabet);
  std::vector<Letter> word;
  auto rec = [&](auto&& self) -> void {
    Word w(x.dim, word);
    CHECK(K::eq(linrep_eval(x, w), linrep_eval(y, w)));
    if (int(word.size()) >= max_len) return;
    for (const Letter& l : x.alphabet) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

TEST_CASE("fixture series coefficients") {
  auto g = fixture_series_phi2<NatSemiring>();
  g.check_well_formed();
  CHECK(g.r == 4);
  CHECK(linrep_eval(g, Word(1)) == 1);
  CHECK(linrep_eval(g, word_from_digits("1121")) == 60);
  CHECK(linrep_eval(g, word_from_digits("2101")) == 18);
  CHECK(linrep_eval(g, word_from_digits("2112")) == 0);
  CHECK(linrep_eval(g, word_from_digits("12010")) == 24);
  CHECK(linrep_eval(g, word_from_digits("11")) == 10);
  CHECK(linrep_eval(g, word_from_digits("022")) == 0);  // leading zero leaves the language
  CHECK_THROWS_AS(linrep_eval(g, Word(1, {{7}})), ContractViolation);
}

TEST_CASE("representation and automaton views agree") {
  auto g = fixture_series_phi2<NatSemiring>();
  WeightedAutomaton<NatSemiring> a = linrep_to_wfa(g);
  a.check_well_formed();
  CHECK(a.num_states == 4);
  std::vector<Letter> word;
  auto rec = [&](auto&& self) -> void {
    Word w(1, word);
    CHECK(weight_of_word(a, w) == linrep_eval(g, w));
    if (int(word.size()) >= 4) return;
    for (const Letter& l : g.alphabet) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
  check_same_series(wfa_to_linrep(a), g, 4);
}

TEST_CASE("hadamard product multiplies coefficients") {
  auto g = fixture_series_phi2<NatSemiring>();
  /* one-state series: coefficient 2^|w| */
  LinearRepresentation<NatSemiring> doubling;
  doubling.dim = 1;
  doubling.r = 1;
  doubling.alphabet = g.alphabet;
  doubling.lambda = Matrix<NatSemiring>::from_ints({{1}});
  doubling.gamma = Matrix<NatSemiring>::from_ints({{1}});
  for (std::size_t i = 0; i < g.alphabet.size(); ++i)
    doubling.mu.push_back(Matrix<NatSemiring>::from_ints({{2}}));

  auto prod = hadamard(g, doubling);
  CHECK(prod.r == g.r * 1);
  std::vector<Letter> word;
  auto rec = [&](auto&& self) -> void {
    Word w(1, word);
    BigInt expect = linrep_eval(g, w);
    for (int i = 0; i < int(word.size()); ++i) expect *= 2;
    CHECK(linrep_eval(prod, w) == expect);
    if (int(word.size()) >= 4) return;
    for (const Letter& l : g.alphabet) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

TEST_CASE("characteristic series of an automaton") {
  MultiTapeDFA lang;
  lang.dim = 1;
  lang.alphabet = {{0}, {1}, {2}};
  lang.initial = 0;
  lang.is_final = {1, 1};
  lang.next = {{0, 0, 1}, {0, 1, -1}};

  auto chi = characteristic_linrep<NatSemiring>(lang, lang.alphabet);
  CHECK(linrep_eval(chi, Word(1)) == 1);
  CHECK(linrep_eval(chi, word_from_digits("0011")) == 1);
  CHECK(linrep_eval(chi, word_from_digits("22")) == 0);

  auto chib = characteristic_linrep<BoolSemiring>(lang, lang.alphabet);
  CHECK(linrep_eval(chib, word_from_digits("21")) == true);
  CHECK(linrep_eval(chib, word_from_digits("22")) == false);
}

TEST_CASE("restriction to a language zeroes everything outside it") {
  auto g = fixture_series_phi2<NatSemiring>();
  MultiTapeDFA lang;
  lang.dim = 1;
  lang.alphabet = {{0}, {1}, {2}};
  lang.initial = 0;
  lang.is_final = {1, 1};
  lang.next = {{0, 0, 1}, {0, 1, -1}};
  auto restricted = restrict_to_language(g, lang);
  std::vector<Letter> word;
  auto rec = [&](auto&& self) -> void {
    Word w(1, word);
    BigInt expect = lang.accepts(w) ? linrep_eval(g, w) : BigInt(0);
    CHECK(linrep_eval(restricted, w) == expect);
    if (int(word.size()) >= 4) return;
    for (const Letter& l : g.alphabet) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

TEST_CASE("initial normal form fixes offending initial states") {
  auto g = fixture_series_phi2<NatSemiring>();
  WeightedAutomaton<NatSemiring> a = linrep_to_wfa(g);

  /* the fixture automaton is already in normal form: unique initial state,
   * no incoming edges, no zero-letter loop */
  WeightedAutomaton<NatSemiring> same = initial_normal_form(a);
  CHECK(same.num_states == a.num_states);

  /* force an incoming edge into the initial state */
  WeightedAutomaton<NatSemiring> b = a;
  b.edges.push_back({1, 1, 0, NatSemiring::from_int(5)});
  WeightedAutomaton<NatSemiring> nb = initial_normal_form(b);
  CHECK(nb.num_states == b.num_states + 1);
  int start = -1;
  for (int q = 0; q < nb.num_states; ++q)
    if (nb.initial[q] != 0) {
      CHECK(start == -1);
      start = q;
    }
  REQUIRE(start >= 0);
  for (const auto& e : nb.edges) CHECK(e.to != start);
  check_same_series(wfa_to_linrep(nb), wfa_to_linrep(b), 4);

  /* spread the initial weight over two states; state 2 has zero-letter
   * continuations, so c picks up weight on zero-prefixed words.  The normal
   * form prunes those on purpose (greedy-indexed series place no weight
   * there) and must agree with c everywhere else. */
  WeightedAutomaton<NatSemiring> c = a;
  c.initial[2] = NatSemiring::from_int(3);
  WeightedAutomaton<NatSemiring> nc = initial_normal_form(c);
  int nonzero = 0;
  for (int q = 0; q < nc.num_states; ++q) nonzero += nc.initial[q] != 0;
  CHECK(nonzero == 1);
  auto lc = wfa_to_linrep(c);
  auto lnc = wfa_to_linrep(nc);
  std::vector<Letter> word;
  auto rec = [&](auto&& self) -> void {
    Word w(1, word);
    if (!word.empty() && word.front() == Letter{0})
      CHECK(linrep_eval(lnc, w) == 0);
    else
      CHECK(linrep_eval(lnc, w) == linrep_eval(lc, w));
    if (int(word.size()) >= 4) return;
    for (const Letter& l : lc.alphabet) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

TEST_CASE("trimming drops states that carry no weight") {
  auto g = fixture_series_phi2<NatSemiring>();
  WeightedAutomaton<NatSemiring> a = linrep_to_wfa(g);
  /* unreachable state and a dead state */
  a.num_states += 2;
  a.initial.push_back(NatSemiring::zero());
  a.initial.push_back(NatSemiring::zero());
  a.final_weights.push_back(NatSemiring::one());
  a.final_weights.push_back(NatSemiring::zero());
  a.edges.push_back({0, 0, 5, NatSemiring::one()});  // into the dead state
  WeightedAutomaton<NatSemiring> t = trim_wfa(a);
  CHECK(t.num_states == 4);
  check_same_series(wfa_to_linrep(t), g, 4);
}

TEST_CASE("shape violations throw") {
  auto g = fixture_series_phi2<NatSemiring>();
  auto broken = g;
  broken.mu.pop_back();
  CHECK_THROWS_AS(broken.check_well_formed(), ContractViolation);

  auto bad_lambda = g;
  bad_lambda.lambda = Matrix<NatSemiring>::from_ints({{1, 0}});
  CHECK_THROWS_AS(bad_lambda.check_well_formed(), ContractViolation);

  WeightedAutomaton<NatSemiring> a = linrep_to_wfa(g);
  a.edges.push_back({0, 0, 99, NatSemiring::one()});
  CHECK_THROWS_AS(a.check_well_formed(), ContractViolation);
}
