#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <type_traits>
#include <vector>

#include "pisot/common.hpp"

namespace pisot {

/* A semiring instance is a stateless struct exposing
 *
 *   using Value = ...;
 *   name(), zero(), one(), add(), mul(), eq(), from_int(), to_string(), parse()
 *
 * Everything downstream uses only (zero, one, add, mul); no construction ever
 * subtracts, so plain commutative semirings (booleans, min-plus) work
 * unchanged.  Addition is assumed commutative.  Numeric carriers are
 * arbitrary precision: coefficients grow like beta^|word|. */

namespace detail {

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw ContractViolation("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ContractViolation("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw ContractViolation("bad integer literal: " + s);
  return BigInt(s);
}

}  // namespace detail

struct NatSemiring {
  using Value = BigInt;
  static const char* name() { return "nat"; }
  static Value zero() { return 0; }
  static Value one() { return 1; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static Value from_int(long long n) {
    require(n >= 0, "nat value must be nonnegative");
    return n;
  }
  static std::string to_string(const Value& v) { return v.str(); }
  static Value parse(const std::string& s) {
    Value v = detail::parse_bigint(s);
    require(v >= 0, "nat value must be nonnegative: " + s);
    return v;
  }
};

struct IntSemiring {
  using Value = BigInt;
  static const char* name() { return "int"; }
  static Value zero() { return 0; }
  static Value one() { return 1; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static Value from_int(long long n) { return n; }
  static std::string to_string(const Value& v) { return v.str(); }
  static Value parse(const std::string& s) { return detail::parse_bigint(s); }
};

struct RatSemiring {
  using Value = BigRat;
  static const char* name() { return "rat"; }
  static Value zero() { return 0; }
  static Value one() { return 1; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static Value from_int(long long n) { return n; }
  /* "p" when the denominator is 1, "p/q" otherwise; parse accepts both. */
  static std::string to_string(const Value& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
  }
  static Value parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Value(detail::parse_bigint(s));
    BigInt p = detail::parse_bigint(s.substr(0, slash));
    BigInt q = detail::parse_bigint(s.substr(slash + 1));
    require(q != 0, "rational with zero denominator: " + s);
    return Value(p) / Value(q);
  }
};

struct BoolSemiring {
  using Value = bool;
  static const char* name() { return "bool"; }
  static Value zero() { return false; }
  static Value one() { return true; }
  static Value add(Value a, Value b) { return a || b; }
  static Value mul(Value a, Value b) { return a && b; }
  static bool eq(Value a, Value b) { return a == b; }
  static Value from_int(long long n) { return n != 0; }
  static std::string to_string(Value v) { return v ? "true" : "false"; }
  static Value parse(const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw ContractViolation("bad boolean literal: " + s);
  }
};

/* Min-plus over Z with +infinity as the additive zero. */
struct TropicalValue {
  bool inf = true;
  BigInt v = 0;
  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.v == b.v;
  }
};

struct TropicalSemiring {
  using Value = TropicalValue;
  static const char* name() { return "tropical"; }
  static Value zero() { return {true, 0}; }
  static Value one() { return {false, 0}; }
  static Value add(const Value& a, const Value& b) {
    if (a.inf) return b;
    if (b.inf) return a;
    return {false, a.v < b.v ? a.v : b.v};
  }
  static Value mul(const Value& a, const Value& b) {
    if (a.inf || b.inf) return zero();
    return {false, a.v + b.v};
  }
  static bool eq(const Value& a, const Value& b) { return a == b; }
  static Value from_int(long long n) { return {false, n}; }
  static std::string to_string(const Value& v) { return v.inf ? "inf" : v.v.str(); }
  static Value parse(const std::string& s) {
    if (s == "inf") return zero();
    return {false, detail::parse_bigint(s)};
  }
};

/* ------------------------------------------------------------------ */

template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  /* vector<bool> hands out proxies, not references; the boolean instance
   * stores in a deque instead, which has no such specialization. */
  using Store = std::conditional_t<std::is_same_v<typename K::Value, bool>,
                                   std::deque<bool>, std::vector<typename K::Value>>;
  Store a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, K::zero()) {
    require(r >= 0 && c >= 0, "negative matrix dimension");
  }

  typename K::Value& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const typename K::Value& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K::one();
    return m;
  }

  static Matrix from_ints(const std::vector<std::vector<long long>>& rows_in) {
    require(!rows_in.empty(), "from_ints: no rows");
    Matrix m(int(rows_in.size()), int(rows_in[0].size()));
    for (int i = 0; i < m.rows; ++i) {
      require(int(rows_in[i].size()) == m.cols, "from_ints: ragged rows");
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = K::from_int(rows_in[i][j]);
    }
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
      if (!K::eq(x.a[i], y.a[i])) return false;
    return true;
  }
};

template <class K>
Matrix<K> mat_mul(const Matrix<K>& x, const Matrix<K>& y) {
  require(x.cols == y.rows, "mat_mul: inner dimensions differ (" +
                                std::to_string(x.cols) + " vs " + std::to_string(y.rows) + ")");
  Matrix<K> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const auto& xik = x.at(i, k);
      if (K::eq(xik, K::zero())) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = K::add(z.at(i, j), K::mul(xik, y.at(k, j)));
    }
  return z;
}

template <class K>
Matrix<K> mat_sum(const std::vector<Matrix<K>>& xs) {
  require(!xs.empty(), "mat_sum: empty list");
  Matrix<K> z(xs[0].rows, xs[0].cols);
  for (const auto& x : xs) {
    require(x.rows == z.rows && x.cols == z.cols, "mat_sum: shape mismatch");
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] = K::add(z.a[i], x.a[i]);
  }
  return z;
}

struct AxiomsReport {
  bool pass = true;
  std::string detail;  // first violated law, when pass == false
};

/* Checks every semiring axiom on all triples drawn from `samples`.
 * Multiplicative commutativity is deliberately not among the laws. */
template <class K>
AxiomsReport axioms_check(const std::vector<typename K::Value>& samples) {
  using V = typename K::Value;
  const V z = K::zero(), e = K::one();
  auto fail = [](const std::string& law) { return AxiomsReport{false, law}; };
  for (const V& a : samples) {
    if (!K::eq(K::add(a, z), a) || !K::eq(K::add(z, a), a)) return fail("additive identity");
    if (!K::eq(K::mul(a, e), a) || !K::eq(K::mul(e, a), a)) return fail("multiplicative identity");
    if (!K::eq(K::mul(a, z), z) || !K::eq(K::mul(z, a), z)) return fail("annihilation by zero");
    for (const V& b : samples) {
      if (!K::eq(K::add(a, b), K::add(b, a))) return fail("additive commutativity");
      for (const V& c : samples) {
        if (!K::eq(K::add(K::add(a, b), c), K::add(a, K::add(b, c)))) return fail("additive associativity");
        if (!K::eq(K::mul(K::mul(a, b), c), K::mul(a, K::mul(b, c)))) return fail("multiplicative associativity");
        if (!K::eq(K::mul(a, K::add(b, c)), K::add(K::mul(a, b), K::mul(a, c)))) return fail("left distributivity");
        if (!K::eq(K::mul(K::add(a, b), c), K::add(K::mul(a, c), K::mul(b, c)))) return fail("right distributivity");
      }
    }
  }
  return {};
}

}  // namespace pisot
