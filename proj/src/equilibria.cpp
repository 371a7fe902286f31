#include "hawkdove/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hawkdove {
namespace {

constexpr int kGridPoints = 10001;  // scan resolution on [0,1]
constexpr Real kMarginalBand = 1e-6;

Real clamp01(Real x) { return std::min(1.0, std::max(0.0, x)); }

Real eval_G(const ResponseFunction& f, Real p) { return f(f(p)) - p; }

// Polynomial self-composition in the monomial basis, minus the identity.
// Only used for the continuum test: for w = 1 - p this is exactly zero, and
// any genuinely different response leaves visibly nonzero coefficients.
Eigen::VectorXd compose_minus_identity(const Eigen::VectorXd& c) {
  const Eigen::Index n = c.size();
  Eigen::VectorXd acc = Eigen::VectorXd::Zero((n - 1) * (n - 1) + 1);
  acc[0] = c[n - 1];
  Eigen::Index deg = 0;  // current degree of acc
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    Eigen::VectorXd next = Eigen::VectorXd::Zero(deg + n);
    for (Eigen::Index a = 0; a <= deg; ++a) {
      if (acc[a] == 0.0) continue;
      for (Eigen::Index b = 0; b < n; ++b) next[a + b] += acc[a] * c[b];
    }
    next[0] += c[i];
    deg += n - 1;
    acc.head(deg + 1) = next;
  }
  acc[1] -= 1.0;
  return acc.head(std::max<Eigen::Index>(deg + 1, 2));
}

Real bisect_root(const ResponseFunction& f, Real lo, Real hi, Real glo, Real tol) {
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const Real mid = 0.5 * (lo + hi);
    const Real gm = eval_G(f, mid);
    if ((glo < 0.0) == (gm < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

StationaryState make_state(const ResponseFunction& f, Real p1, Real p2) {
  const Real sp = f.slope(p1) * f.slope(p2);
  const Real root = std::sqrt(std::max(sp, 0.0));
  StabilityLabel label;
  if (sp < 1.0 - kMarginalBand)
    label = StabilityLabel::AsymptoticallyStable;
  else if (sp > 1.0 + kMarginalBand)
    label = StabilityLabel::Unstable;
  else
    label = StabilityLabel::Marginal;
  return {State(p1, p2), sp, {-1.0 - root, -1.0 + root}, label};
}

}  // namespace

const char* to_string(StabilityLabel label) {
  switch (label) {
    case StabilityLabel::AsymptoticallyStable: return "stable";
    case StabilityLabel::Unstable: return "unstable";
    case StabilityLabel::Marginal: return "marginal";
    case StabilityLabel::Continuum: return "continuum";
  }
  return "?";
}

const char* to_string(Theorem1Verdict v) {
  switch (v) {
    case Theorem1Verdict::GlobalMixed: return "global_mixed";
    case Theorem1Verdict::PureReachable: return "pure_reachable";
    case Theorem1Verdict::Boundary: return "boundary";
  }
  return "?";
}

StationarySet find_stationary_states(const ResponseFunction& f, Real tol) {
  StationarySet out;

  const Eigen::VectorXd composed = compose_minus_identity(f.coefficients());
  if (composed.cwiseAbs().maxCoeff() < 1e-10) {
    out.continuum = true;
    StationaryState marker = make_state(f, 0.5, clamp01(f(0.5)));
    marker.label = StabilityLabel::Continuum;
    out.states.push_back(marker);
    return out;
  }

  const Real step = 1.0 / (kGridPoints - 1);
  std::vector<Real> gv(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) gv[i] = eval_G(f, i * step);

  std::vector<Real> roots{0.0, 1.0};  // the pure states are always stationary
  std::vector<Real> tangential;

  for (int i = 1; i < kGridPoints; ++i) {
    if (gv[i] == 0.0) {
      if (i < kGridPoints - 1) roots.push_back(i * step);
    } else if (gv[i - 1] == 0.0) {
      continue;  // grid-point root already recorded (or it is p = 0)
    } else if ((gv[i - 1] < 0.0) != (gv[i] < 0.0)) {
      roots.push_back(bisect_root(f, (i - 1) * step, i * step, gv[i - 1], tol));
    }
  }

  // Tangential (even-multiplicity) roots leave no sign change; detect local
  // minima of |G| near zero and refine them by golden-section search.
  const Real inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 1; i + 1 < kGridPoints; ++i) {
    if (std::abs(gv[i]) > 1e-5 || gv[i] == 0.0) continue;
    if (std::abs(gv[i]) > std::abs(gv[i - 1]) || std::abs(gv[i]) > std::abs(gv[i + 1])) continue;
    if ((gv[i - 1] < 0.0) != (gv[i + 1] < 0.0)) continue;  // covered by the sign scan
    Real lo = (i - 1) * step, hi = (i + 1) * step;
    Real a = hi - inv_phi * (hi - lo), b = lo + inv_phi * (hi - lo);
    Real fa = std::abs(eval_G(f, a)), fb = std::abs(eval_G(f, b));
    for (int it = 0; it < 120 && hi - lo > tol; ++it) {
      if (fa < fb) {
        hi = b; b = a; fb = fa;
        a = hi - inv_phi * (hi - lo);
        fa = std::abs(eval_G(f, a));
      } else {
        lo = a; a = b; fa = fb;
        b = lo + inv_phi * (hi - lo);
        fb = std::abs(eval_G(f, b));
      }
    }
    const Real pm = 0.5 * (lo + hi);
    if (std::abs(eval_G(f, pm)) <= 100.0 * tol) {
      roots.push_back(pm);
      tangential.push_back(pm);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<Real> unique_roots;
  for (Real r : roots)
    if (unique_roots.empty() || r - unique_roots.back() > 10.0 * tol) unique_roots.push_back(r);

  for (std::size_t i = 1; i < unique_roots.size(); ++i) {
    if (unique_roots[i] - unique_roots[i - 1] < 10.0 * step) {
      std::ostringstream w;
      w.precision(6);
      w << "roots at p1=" << unique_roots[i - 1] << " and p1=" << unique_roots[i]
        << " are closer than 10 grid cells; scan resolution may be insufficient";
      out.warnings.push_back(w.str());
    }
  }

  for (Real r : unique_roots) {
    StationaryState s = make_state(f, r, clamp01(f(r)));
    for (Real t : tangential)
      if (std::abs(t - r) <= 10.0 * tol) s.label = StabilityLabel::Marginal;
    out.states.push_back(s);
  }
  return out;
}

StationaryState classify(const ResponseFunction& f, const State& s, Real residual_tol) {
  const Real r1 = std::abs(f(s[0]) - s[1]);
  const Real r2 = std::abs(f(s[1]) - s[0]);
  if (r1 > residual_tol || r2 > residual_tol) {
    std::ostringstream msg;
    msg << "classify: state (" << s[0] << "," << s[1] << ") is not stationary (residual "
        << std::max(r1, r2) << ")";
    throw std::invalid_argument(msg.str());
  }
  return make_state(f, s[0], s[1]);
}

PureStabilityResult pure_state_stability(const Game& game, const SampleDistribution& theta,
                                         DynamicsKind kind, TieRule tie) {
  const Thresholds th = thresholds(game, kind);
  const Strictness h_side = tie == TieRule::DoveFavoring ? Strictness::Strict : Strictness::Weak;
  const Strictness d_side = tie == TieRule::DoveFavoring ? Strictness::Weak : Strictness::Strict;
  const Real product =
      bounded_expectation(theta, th.m_h, h_side) * bounded_expectation(theta, th.m_d, d_side);
  if (std::abs(product - 1.0) <= 1e-9) return {PureStability::Boundary, product};
  return {product > 1.0 ? PureStability::Unstable : PureStability::Stable, product};
}

bool standard_game_mixed_test(Real g, const SampleDistribution& theta, DynamicsKind kind) {
  if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("standard_game_mixed_test: g in (0,1)");
  const Real checks[] = {1.0 / g, 1.0 / (1.0 - g), (1.0 + g) / g, (1.0 + g) / (1.0 - g)};
  for (Real c : checks) {
    if (std::abs(c - std::round(c)) < 1e-9)
      throw std::invalid_argument(
          "standard_game_mixed_test: threshold is an integer; nongeneric g rejected");
  }
  const Real theta1 = theta.mass(1);
  if (kind == DynamicsKind::ActionSampling) {
    const Real bound = std::max(1.0 / g, 1.0 / (1.0 - g));
    return theta1 * bounded_expectation(theta, bound, Strictness::Weak) > 1.0;
  }
  if (g < 1.0 / 3.0)
    return theta1 * bounded_expectation(theta, (1.0 + g) / g, Strictness::Weak) > 1.0;
  const Real bound = std::max(3.0, (1.0 + g) / (1.0 - g));
  return (theta1 + 2.0 * theta.mass(2)) * bounded_expectation(theta, bound, Strictness::Weak) >
         1.0;
}

Theorem1Verdict theorem1_verdict(const Game& game, const SampleDistribution& theta,
                                 DynamicsKind kind, TieRule tie) {
  switch (pure_state_stability(game, theta, kind, tie).label) {
    case PureStability::Unstable: return Theorem1Verdict::GlobalMixed;
    case PureStability::Stable: return Theorem1Verdict::PureReachable;
    case PureStability::Boundary: break;
  }
  return Theorem1Verdict::Boundary;
}

std::string to_json(const StationarySet& set) {
  std::ostringstream out;
  out.precision(12);
  out << "{\"continuum\":" << (set.continuum ? "true" : "false") << ",\"states\":[";
  for (std::size_t i = 0; i < set.states.size(); ++i) {
    const auto& s = set.states[i];
    if (i) out << ",";
    out << "{\"p1\":" << s.location[0] << ",\"p2\":" << s.location[1]
        << ",\"slope_product\":" << s.slope_product << ",\"eigenvalues\":[" << s.eigenvalues[0]
        << "," << s.eigenvalues[1] << "],\"label\":\"" << to_string(s.label) << "\"}";
  }
  out << "],\"warnings\":[";
  for (std::size_t i = 0; i < set.warnings.size(); ++i) {
    if (i) out << ",";
    out << "\"" << set.warnings[i] << "\"";
  }
  out << "]}";
  return out.str();
}

}  // namespace hawkdove
