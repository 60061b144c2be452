#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "pisot/fixtures.hpp"
#include "pisot/io.hpp"
#include "pisot/normalizer.hpp"
#include "pisot/pipeline.hpp"

using namespace pisot;

namespace {

Word w1(const std::string& s) { return word_from_digits(s); }

/* Enumerate every word over `letters` up to max_len (including the empty
 * word) and hand it to fn. */
void for_all_words(const std::vector<Letter>& letters, int dim, int max_len,
                   const std::function<void(const Word&)>& fn) {
  Word w(dim);
  fn(w);
  auto rec = [&](auto&& self) -> void {
    if (int(w.letters.size()) >= max_len) return;
    for (const auto& l : letters) {
      w.letters.push_back(l);
      fn(w);
      self(self);
      w.letters.pop_back();
    }
  };
  rec(rec);
}

std::vector<Letter> dim1_letters(const std::vector<int>& digits) {
  std::vector<Letter> out;
  for (int d : digits) out.push_back(Letter{d});
  return out;
}

/* Independent route to the value-indexed coefficient: the word's value,
 * folded through the greedy representation and the original series. */
BigInt value_oracle(const LinearRepresentation<NatSemiring>& g, const NumerationSystem& ns,
                    const Word& w) {
  std::vector<int> digits;
  for (const auto& l : w.letters) digits.push_back(l[0]);
  BigInt v = ns.value(digits);
  if (v < 0) v = -v;
  Word r(1);
  for (int d : ns.greedy_rep(v)) r.letters.push_back(Letter{d});
  return linrep_eval(g, r);
}

/* One sparse row pass of a weighted automaton, by letter index. */
template <class K>
std::vector<typename K::Value> row_pass(const WeightedAutomaton<K>& a,
                                        const std::vector<typename K::Value>& row, int li) {
  std::vector<typename K::Value> next(a.num_states, K::zero());
  for (const auto& e : a.edges)
    if (e.letter == li && !K::eq(row[e.from], K::zero()))
      next[e.to] = K::add(next[e.to], K::mul(row[e.from], e.weight));
  return next;
}

}  // namespace

TEST_CASE("cartesian letter grids") {
  auto a = cartesian_letters({{0, 1, 2}});
  REQUIRE(a.size() == 3);
  CHECK(a[0] == Letter{0});
  CHECK(a[2] == Letter{2});
  auto b = cartesian_letters({{0, 1}, {0, 1, 2}});
  REQUIRE(b.size() == 6);
  CHECK(b.front() == (Letter{0, 0}));
  CHECK(b.back() == (Letter{1, 2}));
  CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("representation language automaton") {
  auto phi2 = fixture_phi2();
  auto a = rep_language_dfa({phi2});
  CHECK(a.dim == 1);

  // every greedy representation is accepted, including the empty one for 0
  for (long long n = 0; n < 400; ++n) {
    Word w(1);
    for (int d : phi2.greedy_rep(n)) w.letters.push_back(Letter{d});
    CAPTURE(n);
    CHECK(a.accepts(w));
  }

  // and nothing else: agreement with the greediness predicate on short words
  for_all_words(dim1_letters({0, 1, 2}), 1, 6, [&](const Word& w) {
    std::vector<int> digits;
    for (const auto& l : w.letters) digits.push_back(l[0]);
    bool greedy_no_pad = w.letters.empty() || (digits[0] != 0 && phi2.is_greedy(digits));
    CAPTURE(word_to_display(w));
    CHECK(a.accepts(w) == greedy_no_pad);
  });

  auto pair = rep_language_dfa({phi2, phi2});
  CHECK(pair.dim == 2);
  CHECK(pair.accepts(rep_vec({phi2, phi2}, {BigInt(5), BigInt(9)})));
  CHECK_FALSE(pair.accepts(Word(2, {{0, 0}})));
  CHECK_FALSE(pair.accepts(Word(2, {{0, 0}, {1, 1}})));
  auto grid = cartesian_letters({{0, 1, 2}, {0, 1, 2}});
  for_all_words(grid, 2, 3, [&](const Word& w) {
    bool canonical = w.letters.empty() || w == rep_vec({phi2, phi2}, val_vec({phi2, phi2}, w));
    CAPTURE(word_to_display(w));
    CHECK(pair.accepts(w) == canonical);
  });
}

TEST_CASE("star product of the normalizer with the fixture series") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto n = build_multidim_normalizer({phi2}, a012);
  auto sp = star_product(n, initial_normal_form(linrep_to_wfa(g)));

  CHECK(sp.d == 1);
  CHECK(sp.g_states == 4);
  CHECK(sp.n_states == 5);
  CHECK(sp.g_initial == 0);
  CHECK(sp.product.num_states == 20);

  CHECK(weight_of_word(sp.product, w1("022")) == 4);
  CHECK(weight_of_word(sp.product, w1("22")) == 0);
  CHECK(weight_of_word(sp.product, w1("2101")) == 18);

  // coefficient is the original series at the normal form when the word has
  // delay zero, and vanishes otherwise
  for_all_words(a012, 1, 6, [&](const Word& w) {
    BigInt expect = 0;
    if (delay({phi2}, w) == 0) expect = value_oracle(g, phi2, w);
    CAPTURE(word_to_display(w));
    CHECK(weight_of_word(sp.product, w) == expect);
  });
}

TEST_CASE("padding table is unambiguous and feeds the extra initial row") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto sp = star_product(build_multidim_normalizer({phi2}, a012),
                         initial_normal_form(linrep_to_wfa(g)));
  auto table = compute_alpha_table(sp);
  CHECK(table.unique);
  REQUIRE(table.letters.size() == 3);

  auto av = build_av(sp);
  CHECK(av.num_states == 21);
  CHECK(av.initial[0] == 1);   // extra state
  CHECK(av.initial[1] == 1);   // pair of initial states
  for (int q = 2; q < av.num_states; ++q) CHECK(av.initial[q] == 0);
  CHECK(av.final_weights[0] == 0);
  CHECK(av.final_weights[1] == 1);

  // the only way to leave the extra state with letter 2 and land on the
  // product state 13 is with one zero of padding, total weight 3 + 1
  int li2 = -1;
  for (int i = 0; i < int(av.alphabet.size()); ++i)
    if (av.alphabet[i] == Letter{2}) li2 = i;
  REQUIRE(li2 >= 0);
  bool found = false;
  for (const auto& e : av.edges) {
    if (e.from != 0) continue;
    CHECK(av.alphabet[e.letter] != Letter{0});  // no zero-letter exit here
    if (e.letter == li2 && e.to == 14) {
      found = true;
      CHECK(e.weight == 4);
    }
  }
  CHECK(found);
  REQUIRE(13 < int(table.paddings[li2].size()));
  CHECK(table.paddings[li2][13] == std::vector<int>{1});
}

TEST_CASE("greedy-indexed to value-indexed conversion") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto [v, report] = greedy_to_value_linrep(g, {phi2}, a012);

  CHECK(report.g_dim == 4);
  CHECK(report.normalizer_states == 5);
  CHECK(report.dim_untrimmed == 21);
  CHECK(report.dim_trimmed == 10);
  CHECK(report.paddings_unique);
  CHECK(v.r == 10);

  CHECK(linrep_eval(v, Word(1)) == 1);
  CHECK(linrep_eval(v, w1("22")) == 4);
  CHECK(linrep_eval(v, w1("2101")) == 18);
  CHECK(linrep_eval(v, w1("11222")) == 24);
  CHECK(linrep_eval(v, w1("00")) == 1);

  for_all_words(a012, 1, 6, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(v, w) == value_oracle(g, phi2, w));
  });

  // padding table reports the same lone padding seen in the extra-row test
  bool saw2 = false;
  for (const auto& [letter, per_state] : report.padding_table)
    if (letter == Letter{2}) {
      saw2 = true;
      REQUIRE(13 < int(per_state.size()));
      CHECK(per_state[13] == std::vector<int>{1});
    }
  CHECK(saw2);

  auto [vu, report_u] = greedy_to_value_linrep(g, {phi2}, a012, false);
  CHECK(vu.r == 21);
  CHECK(report_u.trimmed == false);
  for_all_words(a012, 1, 5, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(vu, w) == linrep_eval(v, w));
  });
}

TEST_CASE("leading zeroes do not change the value-indexed coefficient") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto v = greedy_to_value_linrep(g, {phi2}, a012).first;
  for_all_words(a012, 1, 4, [&](const Word& w) {
    auto base = linrep_eval(v, w);
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(word_to_display(w));
      CAPTURE(k);
      CHECK(linrep_eval(v, prepend_zeros(w, k)) == base);
    }
  });
}

TEST_CASE("coefficients split by the sign of the delay") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto sp = star_product(build_multidim_normalizer({phi2}, a012),
                         initial_normal_form(linrep_to_wfa(g)));
  auto v = greedy_to_value_linrep(g, {phi2}, a012).first;
  const auto& pr = sp.product;
  int rs = sp.n_states * sp.g_states;

  // transition structure of the normalizer alone, restricted to moves whose
  // second block is the zero letter; these are the prefix-eating edges
  std::vector<std::vector<std::vector<int>>> zero_moves(
      sp.n_states, std::vector<std::vector<int>>(3));
  for (int q = 0; q < sp.normalizer.num_states(); ++q)
    for (int li = 0; li < int(sp.normalizer.alphabet.size()); ++li) {
      const auto& l = sp.normalizer.alphabet[li];
      if (l[1] != 0) continue;
      int t = sp.normalizer.next[q][li];
      if (t >= 0 && l[0] >= 0 && l[0] <= 2) zero_moves[q][l[0]].push_back(t);
    }

  for_all_words(a012, 1, 5, [&](const Word& w) {
    // delay zero: straight product run
    BigInt s1 = weight_of_word(pr, w);

    // positive delay: the product run over the zero-padded word
    BigInt s3 = 0;
    for (int l = 1; l <= rs; ++l) s3 += weight_of_word(pr, prepend_zeros(w, l));

    // negative delay: eat a nonempty prefix inside the normalizer, then
    // continue in the product from the paired initial state of the series
    BigInt s2 = 0;
    std::vector<BigInt> red(sp.n_states, 0);
    red[sp.normalizer.initial] = 1;
    for (int j = 1; j <= int(w.letters.size()); ++j) {
      std::vector<BigInt> next(sp.n_states, 0);
      int a = w.letters[j - 1][0];
      for (int q = 0; q < sp.n_states; ++q)
        if (red[q] != 0)
          for (int t : zero_moves[q][a]) next[t] += red[q];
      red = next;
      std::vector<BigInt> row(pr.num_states, 0);
      for (int q = 0; q < sp.n_states; ++q) row[q * sp.g_states + sp.g_initial] = red[q];
      for (int k = j; k < int(w.letters.size()); ++k)
        row = row_pass(pr, row, pr.letter_index(w.letters[k]));
      for (int s = 0; s < pr.num_states; ++s) s2 += row[s] * pr.final_weights[s];
    }

    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(v, w) == s1 + s2 + s3);
    int d = delay({phi2}, w);
    if (d == 0) {
      CHECK(s2 == 0);
      CHECK(s3 == 0);
    } else if (d > 0) {
      CHECK(s1 == 0);
      CHECK(s2 == 0);
    } else {
      CHECK(s1 == 0);
      CHECK(s3 == 0);
    }
  });
}

TEST_CASE("round trip back to the greedy-indexed series") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto a012 = dim1_letters({0, 1, 2});
  auto v = greedy_to_value_linrep(g, {phi2}, a012).first;
  auto back = value_to_greedy_linrep(v, {phi2});
  for_all_words(a012, 1, 5, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(back, w) == linrep_eval(g, w));
  });
  CHECK_THROWS_AS(value_to_greedy_linrep(v, SystemTuple{phi2, phi2}), ContractViolation);
}

TEST_CASE("signed digits reach the same coefficients through absolute value") {
  auto phi2 = fixture_phi2();
  auto g = fixture_series_phi2<NatSemiring>();
  auto wide = dim1_letters({-2, -1, 0, 1, 2});
  auto [v, report] = greedy_to_value_linrep(g, {phi2}, wide);
  CHECK(report.paddings_unique);

  CHECK(linrep_eval(v, Word(1, {{-2}, {-2}})) == 4);   // value -8
  CHECK(linrep_eval(v, Word(1, {{1}, {-2}})) == 4);    // value 1
  CHECK(linrep_eval(v, Word(1, {{2}, {-1}})) == 8);    // value 5

  for_all_words(wide, 1, 3, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(v, w) == value_oracle(g, phi2, w));
  });

  // restricting the alphabet afterwards matches the narrow conversion
  auto a012 = dim1_letters({0, 1, 2});
  auto narrow = greedy_to_value_linrep(g, {phi2}, a012).first;
  auto restricted = alphabet_restrict_linrep(v, a012);
  REQUIRE(restricted.alphabet.size() == 3);
  for_all_words(a012, 1, 4, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(restricted, w) == linrep_eval(narrow, w));
  });
}

TEST_CASE("characteristic series of the representation language converts to all-ones") {
  auto zeck = fixture_zeckendorf();
  auto a01 = dim1_letters({0, 1});
  auto chi = characteristic_linrep<NatSemiring>(rep_language_dfa({zeck}), a01);
  auto v = greedy_to_value_linrep(chi, {zeck}, a01).first;
  for_all_words(a01, 1, 6, [&](const Word& w) {
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(v, w) == 1);
  });
}

TEST_CASE("boolean image of the conversion") {
  auto phi2 = fixture_phi2();
  // marks numbers whose greedy representation uses the digit 2 somewhere
  MultiTapeDFA has2;
  has2.dim = 1;
  has2.alphabet = {Letter{0}, Letter{1}, Letter{2}};
  has2.initial = 0;
  has2.is_final = {0, 1};
  has2.next = {{0, 0, 1}, {1, 1, 1}};
  has2.check_well_formed();
  auto lang = intersect(has2, rep_language_dfa({phi2}));
  auto a012 = dim1_letters({0, 1, 2});
  auto chi = characteristic_linrep<BoolSemiring>(lang, a012);
  auto v = greedy_to_value_linrep(chi, {phi2}, a012).first;
  for_all_words(a012, 1, 5, [&](const Word& w) {
    std::vector<int> digits;
    for (const auto& l : w.letters) digits.push_back(l[0]);
    auto rep = phi2.greedy_rep(phi2.value(digits));
    bool expect = std::find(rep.begin(), rep.end(), 2) != rep.end();
    CAPTURE(word_to_display(w));
    CHECK(linrep_eval(v, w) == expect);
  });
}

TEST_CASE("conversion commutes with enlarging the weight domain") {
  auto phi2 = fixture_phi2();
  auto a012 = dim1_letters({0, 1, 2});
  auto vn = greedy_to_value_linrep(fixture_series_phi2<NatSemiring>(), {phi2}, a012).first;
  auto vi = greedy_to_value_linrep(fixture_series_phi2<IntSemiring>(), {phi2}, a012).first;
  auto vq = greedy_to_value_linrep(fixture_series_phi2<RatSemiring>(), {phi2}, a012).first;
  CHECK(vi.r == vn.r);
  CHECK(vq.r == vn.r);
  for_all_words(a012, 1, 4, [&](const Word& w) {
    auto n = NatSemiring::to_string(linrep_eval(vn, w));
    CAPTURE(word_to_display(w));
    CHECK(IntSemiring::to_string(linrep_eval(vi, w)) == n);
    CHECK(RatSemiring::to_string(linrep_eval(vq, w)) == n);
  });
}

TEST_CASE("star product refuses a plain automaton") {
  auto phi2 = fixture_phi2();
  auto g = initial_normal_form(linrep_to_wfa(fixture_series_phi2<NatSemiring>()));
  CHECK_THROWS_AS(star_product(greedy_language_dfa(phi2), g), ContractViolation);
}
