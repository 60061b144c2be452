#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pisot/fixtures.hpp"
#include "pisot/numeration.hpp"

using namespace pisot;

namespace {
std::vector<int> digits_of(const std::string& s) {
  std::vector<int> d;
  for (char c : s) d.push_back(c - '0');
  return d;
}
}  // namespace

TEST_CASE("fixture term tables") {
  NumerationSystem phi2 = fixture_phi2();
  const long long expect_phi2[] = {1, 3, 8, 21, 55, 144, 377, 987};
  for (int i = 0; i < 8; ++i) CHECK(phi2.term(i) == expect_phi2[i]);

  NumerationSystem zeck = fixture_zeckendorf();
  const long long expect_zeck[] = {1, 2, 3, 5, 8, 13, 21, 34};
  for (int i = 0; i < 8; ++i) CHECK(zeck.term(i) == expect_zeck[i]);
}

TEST_CASE("digit alphabets and dominant roots") {
  NumerationSystem phi2 = fixture_phi2();
  CHECK(phi2.digit_bound() == 2);
  CHECK(phi2.digit_alphabet() == std::vector<int>{0, 1, 2});
  CHECK(phi2.beta() == doctest::Approx(2.6180339887).epsilon(1e-8));
  CHECK(phi2.quotients_stabilized());

  NumerationSystem zeck = fixture_zeckendorf();
  CHECK(zeck.digit_bound() == 1);
  CHECK(zeck.digit_alphabet() == std::vector<int>{0, 1});
  CHECK(zeck.beta() == doctest::Approx(1.6180339887).epsilon(1e-8));
  CHECK(zeck.quotients_stabilized());
}

TEST_CASE("dominant root test verdicts") {
  CHECK(fixture_phi2().pisot_check().ok());
  CHECK(fixture_zeckendorf().pisot_check().ok());

  /* X^2 - 4 has the conjugate -2 outside the unit circle */
  NumerationSystem sq("square", {0, 4}, {1, 3});
  CHECK(sq.pisot_check().status == PisotVerdict::Status::fail);

  /* (X - 1)(X - 2) puts a conjugate root exactly on the unit circle */
  NumerationSystem border("border", {3, -2}, {1, 2});
  CHECK(border.pisot_check().status == PisotVerdict::Status::inconclusive);
}

TEST_CASE("constructor contract") {
  CHECK_THROWS_AS(NumerationSystem("bad", {}, {}), ContractViolation);
  CHECK_THROWS_AS(NumerationSystem("bad", {3, -1}, {2, 3}), ContractViolation);   // U(0) != 1
  CHECK_THROWS_AS(NumerationSystem("bad", {3, -1}, {1, 1}), ContractViolation);   // not increasing
  CHECK_THROWS_AS(NumerationSystem("bad", {3, -1}, {1}), ContractViolation);      // size mismatch
  CHECK_THROWS_AS(NumerationSystem("bad", {1, -3}, {1, 2}), ContractViolation);   // terms go negative
}

TEST_CASE("greedy representations match the worked examples") {
  NumerationSystem phi2 = fixture_phi2();
  CHECK(phi2.greedy_rep(9) == digits_of("101"));
  CHECK(phi2.greedy_rep(7) == digits_of("21"));
  CHECK(phi2.greedy_rep(5) == digits_of("12"));
  CHECK(phi2.greedy_rep(0).empty());
  CHECK(phi2.value(digits_of("012")) == 5);
  CHECK(phi2.value(std::vector<int>{-2, -2}) == -8);
  CHECK(phi2.value({}) == 0);

  NumerationSystem zeck = fixture_zeckendorf();
  CHECK(zeck.value(digits_of("11")) == 3);
  CHECK(zeck.value(digits_of("100")) == 3);
  CHECK(zeck.greedy_rep(3) == digits_of("100"));
}

TEST_CASE("greediness predicate") {
  NumerationSystem phi2 = fixture_phi2();
  CHECK(phi2.is_greedy(digits_of("21")));
  CHECK(phi2.is_greedy(digits_of("101")));
  CHECK(phi2.is_greedy({}));
  CHECK_FALSE(phi2.is_greedy(digits_of("22")));   // 8 = 100
  CHECK_FALSE(phi2.is_greedy(digits_of("012")));  // leading zero
  CHECK_FALSE(phi2.is_greedy(digits_of("3")));    // 3 = 10

  NumerationSystem zeck = fixture_zeckendorf();
  CHECK_FALSE(zeck.is_greedy(digits_of("11")));
  CHECK(zeck.is_greedy(digits_of("100")));
}

TEST_CASE("value round trip below 2000") {
  for (const NumerationSystem& ns : {fixture_phi2(), fixture_zeckendorf()}) {
    for (long long n = 0; n < 2000; ++n) {
      std::vector<int> rep = ns.greedy_rep(n);
      CHECK(ns.value(rep) == n);
      CHECK(ns.is_greedy(rep));
    }
  }
  CHECK_THROWS_AS(fixture_phi2().greedy_rep(-1), ContractViolation);
}

TEST_CASE("tuple representations pad on the left") {
  SystemTuple two = {fixture_phi2(), fixture_phi2()};
  Word w = rep_vec(two, {BigInt(5), BigInt(9)});
  CHECK(w == Word(2, {{0, 1}, {1, 0}, {2, 1}}));
  CHECK(val_vec(two, w) == std::vector<BigInt>{5, 9});
  CHECK(rep_vec(two, {BigInt(0), BigInt(0)}).empty());

  Word signed_pair(2, {{-3, 0}, {1, 1}, {-1, 1}});
  CHECK(val_vec(two, signed_pair) == std::vector<BigInt>{-22, 4});
}

TEST_CASE("padded tuples evaluate component-wise") {
  SystemTuple two = {fixture_phi2(), fixture_phi2()};
  Word w = pad_tuple({{0, 2, 1}, {0, 0, 0, 1}});
  CHECK(w.size() == 4);
  CHECK(val_vec(two, w) == std::vector<BigInt>{7, 1});
}

TEST_CASE("delay compares against the padded normal form") {
  SystemTuple one = {fixture_phi2()};
  CHECK(delay(one, Word(1, {{1}, {-2}})) == -1);
  CHECK(delay(one, Word(1, {{2}, {2}})) == 1);
  CHECK(delay(one, Word(1, {{1}, {0}})) == 0);
  CHECK(delay(one, Word(1)) == 0);

  SystemTuple two = {fixture_phi2(), fixture_phi2()};
  CHECK(delay(two, Word(2, {{2, 1}, {2, 0}})) == 1);
  CHECK(delay(two, Word(2, {{0, 0}, {2, 1}, {2, 0}})) == 0);
}
