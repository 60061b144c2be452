#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pisot/common.hpp"
#include "pisot/words.hpp"

namespace pisot {

struct PisotVerdict {
  enum class Status { pass, fail, inconclusive };
  Status status = Status::fail;
  std::string detail;
  bool ok() const { return status == Status::pass; }
};

/* A linear numeration system U: U(0..m-1) given, then
 *
 *   U(i+m) = c_1 U(i+m-1) + ... + c_m U(i)      for all i >= 0,
 *
 * with U(0) = 1 and U strictly increasing.  Coefficients are signed (the
 * running example is U(i+2) = 3 U(i+1) - U(i)).  Terms are cached behind a
 * shared, mutex-guarded store, so copies are cheap and a tuple of systems can
 * be evaluated from several threads. */
class NumerationSystem {
 public:
  NumerationSystem(std::string name, std::vector<long long> recurrence,
                   std::vector<long long> initial);

  const std::string& name() const { return name_; }
  int order() const { return int(recurrence_.size()); }
  const std::vector<long long>& recurrence() const { return recurrence_; }

  BigInt term(int i) const;

  /* Canonical digit alphabet 0..digit_bound, where digit_bound is the larger
   * of ceil(beta)-1 and the largest ceil(U(i+1)/U(i))-1 seen before the
   * quotients settle within 1e-6 of beta (quotients_stabilized reports
   * whether they did within the scanned range). */
  int digit_bound() const { return digit_bound_; }
  std::vector<int> digit_alphabet() const;
  bool quotients_stabilized() const { return quotients_stabilized_; }

  /* Dominant root of X^m - c_1 X^{m-1} - ... - c_m and the remaining roots. */
  double beta() const { return beta_; }
  const std::vector<std::complex<double>>& conjugates() const { return conjugates_; }

  /* Pisot test on the recurrence polynomial: exactly one root of modulus > 1,
   * real and positive; all others strictly inside the unit circle.  Roots
   * with modulus within tol of 1 give an inconclusive verdict. */
  PisotVerdict pisot_check(double tol = 1e-9) const;

  /* sum_i w_i U(|w|-1-i); digits may be negative or exceed the alphabet. */
  BigInt value(const std::vector<int>& digits) const;

  /* Greedy representation of n >= 0; empty for 0.  Digits land in the greedy
   * digit set automatically. */
  std::vector<int> greedy_rep(const BigInt& n) const;

  /* w == greedy_rep(value(w)), i.e. no leading zero and greedy everywhere. */
  bool is_greedy(const std::vector<int>& digits) const;

 private:
  struct TermCache {
    std::mutex mu;
    std::vector<BigInt> terms;
  };

  void ensure_terms(int upto) const;

  std::string name_;
  std::vector<long long> recurrence_;
  std::shared_ptr<TermCache> cache_;
  double beta_ = 0.0;
  std::vector<std::complex<double>> conjugates_;
  int digit_bound_ = 0;
  bool quotients_stabilized_ = false;
};

using SystemTuple = std::vector<NumerationSystem>;

/* Padded tuple representation of a vector of nonnegative integers: each
 * component is represented greedily, then rows are left-padded with 0 to the
 * longest one.  rep of the zero vector is the empty word. */
Word rep_vec(const SystemTuple& systems, const std::vector<BigInt>& values);

std::vector<BigInt> val_vec(const SystemTuple& systems, const Word& w);

/* |normalized(w)| - |w|: how much longer (or shorter, negative) the padded
 * normal form is compared to w itself. */
int delay(const SystemTuple& systems, const Word& w);

}  // namespace pisot
