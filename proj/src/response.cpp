#include "hawkdove/response.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hawkdove {
namespace {

using Int128 = __int128;

// Pascal triangle up to row 128 in exact 128-bit integers (C(128,64) fits).
class PascalCache {
 public:
  static const PascalCache& instance() {
    static PascalCache cache;
    return cache;
  }
  Int128 choose(int n, int r) const {
    if (r < 0 || r > n) return 0;
    return rows_[n][r];
  }
  static constexpr int kMaxRow = 128;

 private:
  PascalCache() {
    rows_.resize(kMaxRow + 1);
    for (int n = 0; n <= kMaxRow; ++n) {
      rows_[n].assign(n + 1, 1);
      for (int r = 1; r < n; ++r) rows_[n][r] = rows_[n - 1][r - 1] + rows_[n - 1][r];
    }
  }
  std::vector<std::vector<Int128>> rows_;
};

double to_double(Int128 v) { return static_cast<double>(v); }

// Expands sum_s A[s] * p^s * (1-p)^(d-s) into the monomial basis:
// c_n = sum_{s<=n} A[s] * C(d-s, n-s) * (-1)^(n-s).
// Exact in 128-bit integers for d <= 80; long-double accumulation beyond
// (degrees that high are far outside every tabulated use).
Eigen::VectorXd bernstein_numerators_to_monomial(const std::vector<Int128>& A, int d) {
  const auto& pascal = PascalCache::instance();
  Eigen::VectorXd c(d + 1);
  if (d <= 80) {
    for (int n = 0; n <= d; ++n) {
      Int128 acc = 0;
      for (int s = 0; s <= n; ++s) {
        if (A[s] == 0) continue;
        const Int128 term = A[s] * pascal.choose(d - s, n - s);
        acc += ((n - s) % 2 == 0) ? term : -term;
      }
      c[n] = to_double(acc);
    }
  } else {
    for (int n = 0; n <= d; ++n) {
      long double acc = 0.0L;
      for (int s = 0; s <= n; ++s) {
        if (A[s] == 0) continue;
        const long double term = static_cast<long double>(to_double(A[s])) *
                                 static_cast<long double>(to_double(pascal.choose(d - s, n - s)));
        acc += ((n - s) % 2 == 0) ? term : -term;
      }
      c[n] = static_cast<double>(acc);
    }
  }
  return c;
}

void check_support(const SampleDistribution& theta) {
  if (theta.max_support() > kMaxSampleSize)
    throw std::invalid_argument("response: max(supp(theta)) exceeds " +
                                std::to_string(kMaxSampleSize) +
                                "; unbounded or overlong supports are rejected");
}

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double z = s - a;
  e = (a - (s - z)) + (b - z);
}

inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// theta-weighted accumulation of per-size integer coefficient vectors into a
// head/tail pair. The head is the 64-bit monomial representation; the tail
// carries the accumulation residue so that the huge cancellations at p = 1
// (where the true coefficients sum to 0) survive the mixture rounding.
struct MixAccumulator {
  Eigen::VectorXd head, tail;

  explicit MixAccumulator(int degree)
      : head(Eigen::VectorXd::Zero(degree + 1)), tail(Eigen::VectorXd::Zero(degree + 1)) {}

  void add(Real mass, const Eigen::VectorXd& c) {
    for (Eigen::Index n = 0; n < c.size(); ++n) {
      double prod, perr, sum, serr;
      two_prod(mass, c[n], prod, perr);
      two_sum(head[n], prod, sum, serr);
      head[n] = sum;
      tail[n] += serr + perr;
    }
  }
};

}  // namespace

// Compensated Horner on the head plus a plain Horner correction from the
// tail; accurate to O(u) of the true value even after massive cancellation.
Real PolyPair::eval(Real x) const {
  const auto n = head.size();
  if (n == 0) return 0.0;
  double s = head[n - 1];
  double comp = 0.0;
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    double prod, perr, serr;
    two_prod(s, x, prod, perr);
    two_sum(prod, head[i], s, serr);
    comp = comp * x + (perr + serr);
  }
  double t = 0.0;
  for (Eigen::Index i = tail.size() - 1; i >= 0; --i) t = t * x + tail[i];
  return s + (comp + t);
}

ResponseFunction::ResponseFunction(PolyPair value, DynamicsKind kind, TieRule tie,
                                   std::optional<Game> game,
                                   std::optional<SampleDistribution> theta)
    : value_(std::move(value)),
      kind_(kind),
      tie_(tie),
      game_(std::move(game)),
      theta_(std::move(theta)) {
  if (value_.head.size() == 0)
    throw std::invalid_argument("ResponseFunction: empty coefficients");
  const Eigen::Index n = std::max<Eigen::Index>(value_.head.size() - 1, 1);
  deriv_.head = Eigen::VectorXd::Zero(n);
  deriv_.tail = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 1; i < value_.head.size(); ++i) {
    double prod, perr;
    two_prod(static_cast<double>(i), value_.head[i], prod, perr);
    deriv_.head[i - 1] = prod;
    deriv_.tail[i - 1] = perr + static_cast<double>(i) * value_.tail[i];
  }
}

ResponseFunction::ResponseFunction(Eigen::VectorXd coefficients, DynamicsKind kind, TieRule tie,
                                   std::optional<Game> game,
                                   std::optional<SampleDistribution> theta)
    : ResponseFunction(PolyPair{std::move(coefficients),
                                Eigen::VectorXd::Zero(0)},
                       kind, tie, std::move(game), std::move(theta)) {}

Real ResponseFunction::operator()(Real p) const { return value_.eval(p); }

Real ResponseFunction::slope(Real p) const { return deriv_.eval(p); }

std::string ResponseFunction::coefficients_json() const {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (Eigen::Index i = 0; i < value_.head.size(); ++i) {
    if (i) out << ",";
    out << value_.head[i];
  }
  out << "]";
  return out.str();
}

int action_sampling_cutoff(const Game& game, TieRule tie, int k) {
  // Hawk is adopted iff hawks/k < a (dove ties) or <= a (hawk ties), with
  // a = g/(1+g-l); the inclusive cutoff is ceil(k*a)-1, resp. floor(k*a).
  // Scanning the best-reply predicate keeps integer ties exact.
  int cutoff = -1;
  for (int i = 0; i < k; ++i) {
    if (action_best_reply(game, tie, i, k) == Action::Hawk)
      cutoff = i;
    else
      break;
  }
  return cutoff;
}

ResponseFunction build_action_response(const Game& game, const SampleDistribution& theta,
                                       TieRule tie) {
  check_support(theta);
  const auto& pascal = PascalCache::instance();
  MixAccumulator mix(theta.max_support());
  for (const auto& atom : theta.atoms()) {
    const int k = atom.k;
    const int m = action_sampling_cutoff(game, tie, k);
    std::vector<Int128> A(k + 1, 0);
    for (int i = 0; i <= m; ++i) A[i] = pascal.choose(k, i);
    mix.add(atom.mass, bernstein_numerators_to_monomial(A, k));
  }
  return {PolyPair{std::move(mix.head), std::move(mix.tail)}, DynamicsKind::ActionSampling, tie,
          game, theta};
}

ResponseFunction build_payoff_response(const Game& game, const SampleDistribution& theta,
                                       TieRule tie) {
  check_support(theta);
  const auto& pascal = PascalCache::instance();
  MixAccumulator mix(2 * theta.max_support());
  for (const auto& atom : theta.atoms()) {
    const int k = atom.k;
    std::vector<Int128> A(2 * k + 1, 0);
    for (int X = 0; X <= k; ++X)
      for (int Y = 0; Y <= k; ++Y)
        if (payoff_best_reply(game, tie, X, Y, k) == Action::Hawk)
          A[X + Y] += pascal.choose(k, X) * pascal.choose(k, Y);
    mix.add(atom.mass, bernstein_numerators_to_monomial(A, 2 * k));
  }
  return {PolyPair{std::move(mix.head), std::move(mix.tail)}, DynamicsKind::PayoffSampling, tie,
          game, theta};
}

ResponseFunction build_limit_payoff_response(int k) {
  if (k < 1 || k > kMaxSampleSize)
    throw std::invalid_argument("build_limit_payoff_response: k must be in [1, 64]");
  const auto& pascal = PascalCache::instance();
  std::vector<Int128> A(2 * k + 1, 0);
  for (int X = 0; X <= k; ++X)
    for (int Y = 0; Y <= k; ++Y)
      if (2 * X - Y < k) A[X + Y] += pascal.choose(k, X) * pascal.choose(k, Y);
  Eigen::VectorXd coef = bernstein_numerators_to_monomial(A, 2 * k);
  return {std::move(coef), DynamicsKind::PayoffSampling, TieRule::DoveFavoring};
}

Real inverse(const ResponseFunction& f, Real q, Real tol) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("inverse: q must be in [0,1]");
  const Real w0 = f(0.0), w1 = f(1.0);
  if (!(w0 > w1)) throw std::invalid_argument("inverse: response is not decreasing");
  for (int i = 1; i < 16; ++i) {
    if (f(i / 16.0) >= f((i - 1) / 16.0))
      throw std::invalid_argument("inverse: monotonicity check failed");
  }
  Real lo = 0.0, hi = 1.0;  // f(lo) >= q >= f(hi)
  for (int it = 0; it < 200; ++it) {
    const Real mid = 0.5 * (lo + hi);
    const Real v = f(mid);
    if (std::abs(v - q) <= tol) return mid;
    if (v > q)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-16) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace hawkdove
