#include "pisot/numeration.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace pisot {

namespace {

/* ceil with a small tolerance so that integer roots computed in floating
 * point (plain base-b systems) do not get bumped to the next integer. */
int ceil_tol(double x) { return int(std::ceil(x - 1e-9)); }

/* Roots of X^m - c_1 X^{m-1} - ... - c_m via the companion matrix; the
 * dominant real root is then polished with Newton steps. */
void recurrence_roots(const std::vector<long long>& c, double& beta,
                      std::vector<std::complex<double>>& others) {
  const int m = int(c.size());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) companion(0, j) = double(c[j]);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);

  int dominant = 0;
  double best = -1.0;
  for (int i = 0; i < m; ++i) {
    double mod = std::abs(solver.eigenvalues()[i]);
    if (mod > best) {
      best = mod;
      dominant = i;
    }
  }
  beta = solver.eigenvalues()[dominant].real();

  auto poly = [&](double x) {
    double p = 1.0;
    for (int j = 0; j < m; ++j) p = p * x - double(c[j]);
    return p;
  };
  auto dpoly = [&](double x) {
    double p = 1.0, dp = 0.0;
    for (int j = 0; j < m; ++j) {
      dp = dp * x + p;
      p = p * x - double(c[j]);
    }
    return dp;
  };
  for (int it = 0; it < 60; ++it) {
    double d = dpoly(beta);
    if (d == 0.0) break;
    double next = beta - poly(beta) / d;
    if (!std::isfinite(next) || std::abs(next - beta) < 1e-15) break;
    beta = next;
  }

  others.clear();
  for (int i = 0; i < m; ++i)
    if (i != dominant) others.push_back(solver.eigenvalues()[i]);
}

}  // namespace

NumerationSystem::NumerationSystem(std::string name, std::vector<long long> recurrence,
                                   std::vector<long long> initial)
    : name_(std::move(name)), recurrence_(std::move(recurrence)),
      cache_(std::make_shared<TermCache>()) {
  require(!recurrence_.empty(), "numeration system needs a nonempty recurrence");
  require(recurrence_.size() == initial.size(),
          "numeration system needs exactly as many initial terms as recurrence coefficients");
  require(initial[0] == 1, "U(0) must be 1");
  for (std::size_t i = 0; i + 1 < initial.size(); ++i)
    require(initial[i] < initial[i + 1], "initial terms must be strictly increasing");
  for (long long t : initial) cache_->terms.push_back(BigInt(t));

  recurrence_roots(recurrence_, beta_, conjugates_);
  require(beta_ > 1.0, "dominant recurrence root must exceed 1 for an increasing system");

  /* Digit bound: scan quotients until they settle near beta. */
  ensure_terms(order() + 2);
  int bound = ceil_tol(beta_) - 1;
  quotients_stabilized_ = false;
  for (int i = 0; i < 200; ++i) {
    ensure_terms(i + 2);
    double q;
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      q = double(BigRat(cache_->terms[i + 1], cache_->terms[i]).convert_to<double>());
    }
    bound = std::max(bound, ceil_tol(q) - 1);
    if (std::abs(q - beta_) < 1e-6) {
      quotients_stabilized_ = true;
      break;
    }
  }
  digit_bound_ = bound;
}

void NumerationSystem::ensure_terms(int upto) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  const int m = order();
  while (int(cache_->terms.size()) < upto) {
    std::size_t n = cache_->terms.size();
    BigInt next = 0;
    for (int j = 0; j < m; ++j) next += BigInt(recurrence_[j]) * cache_->terms[n - 1 - j];
    require(next > cache_->terms.back(),
            "recurrence stops increasing at index " + std::to_string(n) + " in system " + name_);
    cache_->terms.push_back(next);
  }
}

BigInt NumerationSystem::term(int i) const {
  require(i >= 0, "term index must be nonnegative");
  ensure_terms(i + 1);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->terms[i];
}

std::vector<int> NumerationSystem::digit_alphabet() const {
  std::vector<int> a(digit_bound_ + 1);
  for (int i = 0; i <= digit_bound_; ++i) a[i] = i;
  return a;
}

PisotVerdict NumerationSystem::pisot_check(double tol) const {
  int outside = 0;
  bool dominant_real_positive = beta_ > 1.0;
  for (const auto& r : conjugates_) {
    double mod = std::abs(r);
    if (mod > 1.0 + tol) ++outside;
    else if (mod >= 1.0 - tol)
      return {PisotVerdict::Status::inconclusive,
              "root of modulus " + std::to_string(mod) + " too close to the unit circle"};
  }
  if (outside > 0)
    return {PisotVerdict::Status::fail,
            std::to_string(outside + 1) + " roots outside the unit circle"};
  if (!dominant_real_positive)
    return {PisotVerdict::Status::fail, "dominant root is not a real number > 1"};
  return {PisotVerdict::Status::pass,
          "dominant root " + std::to_string(beta_) + ", all conjugates inside the unit circle"};
}

BigInt NumerationSystem::value(const std::vector<int>& digits) const {
  const int n = int(digits.size());
  ensure_terms(n);
  BigInt v = 0;
  for (int i = 0; i < n; ++i) v += BigInt(digits[i]) * term(n - 1 - i);
  return v;
}

std::vector<int> NumerationSystem::greedy_rep(const BigInt& n) const {
  require(n >= 0, "greedy_rep is defined on nonnegative integers");
  if (n == 0) return {};
  int top = 0;
  while (term(top + 1) <= n) ++top;
  std::vector<int> digits;
  BigInt rest = n;
  for (int i = top; i >= 0; --i) {
    BigInt d = rest / term(i);
    digits.push_back(int(d));
    rest -= d * term(i);
  }
  return digits;
}

bool NumerationSystem::is_greedy(const std::vector<int>& digits) const {
  for (int d : digits)
    if (d < 0) return false;
  return digits == greedy_rep(value(digits));
}

Word rep_vec(const SystemTuple& systems, const std::vector<BigInt>& values) {
  require(!systems.empty(), "rep_vec: empty system tuple");
  require(systems.size() == values.size(), "rep_vec: dimension mismatch");
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0; j < systems.size(); ++j) {
    require(values[j] >= 0, "rep_vec is defined on nonnegative vectors");
    rows.push_back(systems[j].greedy_rep(values[j]));
  }
  return pad_tuple(rows);
}

std::vector<BigInt> val_vec(const SystemTuple& systems, const Word& w) {
  require(!systems.empty(), "val_vec: empty system tuple");
  require(int(systems.size()) == w.dim, "val_vec: word dimension differs from system tuple");
  std::vector<BigInt> vals;
  for (std::size_t j = 0; j < systems.size(); ++j)
    vals.push_back(systems[j].value(word_track(w, int(j))));
  return vals;
}

int delay(const SystemTuple& systems, const Word& w) {
  require(int(systems.size()) == w.dim, "delay: word dimension differs from system tuple");
  int normalized_len = 0;
  for (std::size_t j = 0; j < systems.size(); ++j) {
    BigInt v = systems[j].value(word_track(w, int(j)));
    if (v < 0) v = -v;
    normalized_len = std::max(normalized_len, int(systems[j].greedy_rep(v).size()));
  }
  return normalized_len - w.size();
}

}  // namespace pisot
