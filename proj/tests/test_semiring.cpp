#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pisot/semiring.hpp"

using namespace pisot;

TEST_CASE("axioms hold for every shipped semiring") {
  {
    std::vector<NatSemiring::Value> s = {0, 1, 2, 3, 5, 7};
    AxiomsReport r = axioms_check<NatSemiring>(s);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  {
    std::vector<IntSemiring::Value> s = {0, 1, -1, 2, -3, 5};
    AxiomsReport r = axioms_check<IntSemiring>(s);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  {
    std::vector<RatSemiring::Value> s = {0, 1, -1, RatSemiring::parse("1/2"),
                                         RatSemiring::parse("-2/3"), RatSemiring::parse("7/5")};
    AxiomsReport r = axioms_check<RatSemiring>(s);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  {
    std::vector<BoolSemiring::Value> s = {false, true};
    AxiomsReport r = axioms_check<BoolSemiring>(s);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  {
    std::vector<TropicalSemiring::Value> s = {TropicalSemiring::zero(), TropicalSemiring::one(),
                                              TropicalSemiring::from_int(2),
                                              TropicalSemiring::from_int(-3),
                                              TropicalSemiring::from_int(7)};
    AxiomsReport r = axioms_check<TropicalSemiring>(s);
    CHECK_MESSAGE(r.pass, r.detail);
  }
}

TEST_CASE("nat semiring parses nonnegative integers only") {
  CHECK(NatSemiring::eq(NatSemiring::parse("12"), NatSemiring::from_int(12)));
  CHECK(NatSemiring::to_string(NatSemiring::parse("120000000000000000000")) ==
        "120000000000000000000");
  CHECK_THROWS_AS(NatSemiring::parse("-1"), ContractViolation);
  CHECK_THROWS_AS(NatSemiring::parse("zebra"), ContractViolation);
  CHECK_THROWS_AS(NatSemiring::from_int(-3), ContractViolation);
}

TEST_CASE("int semiring round trips signed values") {
  CHECK(IntSemiring::eq(IntSemiring::parse("-5"), IntSemiring::from_int(-5)));
  CHECK(IntSemiring::to_string(IntSemiring::add(IntSemiring::from_int(2),
                                                IntSemiring::from_int(-7))) == "-5");
  CHECK_THROWS_AS(IntSemiring::parse("1.5"), ContractViolation);
}

TEST_CASE("rational semiring arithmetic and canonical strings") {
  auto half = RatSemiring::parse("1/2");
  auto third = RatSemiring::parse("1/3");
  CHECK(RatSemiring::eq(RatSemiring::add(half, third), RatSemiring::parse("5/6")));
  CHECK(RatSemiring::eq(RatSemiring::mul(half, third), RatSemiring::parse("1/6")));
  CHECK(RatSemiring::to_string(RatSemiring::parse("4/6")) == "2/3");
  CHECK(RatSemiring::to_string(RatSemiring::parse("8/4")) == "2");
  CHECK(RatSemiring::eq(RatSemiring::parse("-2/3"), RatSemiring::parse("2/-3")));
  CHECK_THROWS_AS(RatSemiring::parse("1/0"), ContractViolation);
  CHECK_THROWS_AS(RatSemiring::parse("a/b"), ContractViolation);
}

TEST_CASE("boolean semiring is or/and") {
  CHECK(BoolSemiring::add(false, true) == true);
  CHECK(BoolSemiring::add(false, false) == false);
  CHECK(BoolSemiring::mul(true, false) == false);
  CHECK(BoolSemiring::mul(true, true) == true);
  CHECK(BoolSemiring::parse("true") == true);
  CHECK(BoolSemiring::parse("1") == true);
  CHECK(BoolSemiring::parse("false") == false);
  CHECK(BoolSemiring::parse("0") == false);
  CHECK_THROWS_AS(BoolSemiring::parse("maybe"), ContractViolation);
}

TEST_CASE("tropical semiring is (min, +) with infinity") {
  auto three = TropicalSemiring::from_int(3);
  auto five = TropicalSemiring::from_int(5);
  CHECK(TropicalSemiring::eq(TropicalSemiring::add(three, five), three));
  CHECK(TropicalSemiring::eq(TropicalSemiring::mul(three, five), TropicalSemiring::from_int(8)));
  CHECK(TropicalSemiring::eq(TropicalSemiring::mul(TropicalSemiring::zero(), five),
                             TropicalSemiring::zero()));
  CHECK(TropicalSemiring::eq(TropicalSemiring::add(TropicalSemiring::zero(), five), five));
  CHECK(TropicalSemiring::to_string(TropicalSemiring::zero()) == "inf");
  CHECK(TropicalSemiring::eq(TropicalSemiring::parse("inf"), TropicalSemiring::zero()));
  CHECK(TropicalSemiring::eq(TropicalSemiring::parse("-4"), TropicalSemiring::from_int(-4)));
}

TEST_CASE("matrices multiply in the chosen semiring") {
  auto a = Matrix<IntSemiring>::from_ints({{1, 2}, {3, 4}});
  auto b = Matrix<IntSemiring>::from_ints({{0, 1}, {1, 1}});
  auto ab = mat_mul(a, b);
  CHECK(ab == Matrix<IntSemiring>::from_ints({{2, 3}, {4, 7}}));
  CHECK(mat_mul(a, Matrix<IntSemiring>::identity(2)) == a);
  CHECK(mat_mul(Matrix<IntSemiring>::identity(2), a) == a);
  CHECK(mat_sum<IntSemiring>({a, b}) == Matrix<IntSemiring>::from_ints({{1, 3}, {4, 5}}));

  /* tropical: matrix product = shortest paths over one step */
  auto t = [](long long n) { return TropicalSemiring::from_int(n); };
  Matrix<TropicalSemiring> w(2, 2);
  w.at(0, 0) = t(1);
  w.at(0, 1) = t(10);
  w.at(1, 0) = TropicalSemiring::zero();
  w.at(1, 1) = t(2);
  auto w2 = mat_mul(w, w);
  CHECK(TropicalSemiring::eq(w2.at(0, 1), t(11)));  // min(1+10, 10+2)
  CHECK(TropicalSemiring::eq(w2.at(1, 0), TropicalSemiring::zero()));
}

TEST_CASE("matrix shape violations throw") {
  auto a = Matrix<IntSemiring>::from_ints({{1, 2}, {3, 4}});
  auto v = Matrix<IntSemiring>::from_ints({{1, 2, 3}});
  CHECK_THROWS_AS(mat_mul(a, v), ContractViolation);
  CHECK_THROWS_AS(mat_sum<IntSemiring>({a, v}), ContractViolation);
}
