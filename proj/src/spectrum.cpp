#include "mfa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mfa/errors.hpp"

namespace mfa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clamp_dim(double d) {
  if (d < 0.0 && d >= -1e-9) return 0.0;
  if (d > 1.0 && d <= 1.0 + 1e-9) return 1.0;
  return d;
}

// Legendre integrand (P - s P')/(2 log m), evaluated on the potential shifted
// by -slope so the transfer solution stays O(1) near the relevant endpoint.
// The quantity itself is shift-invariant.
double legendre_value_shifted(const PotentialMatrix& shifted, double s, double tol, int m) {
  const PressurePoint pp = pressure_derivative(shifted, s, tol);
  return (pp.P - s * pp.Pprime) / (2.0 * std::log(static_cast<double>(m)));
}

PotentialMatrix shift_potential(const PotentialMatrix& model, double c) {
  std::vector<std::vector<double>> phi(static_cast<std::size_t>(model.m()),
                                       std::vector<double>(static_cast<std::size_t>(model.m())));
  for (int i = 0; i < model.m(); ++i)
    for (int j = 0; j < model.m(); ++j) phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = model.phi(i, j) + c;
  return potential_from_matrix(phi);
}

SpectrumPoint endpoint_limit(const PotentialMatrix& model, double alpha, bool left,
                             const EndpointSlopes& slopes, double tol) {
  const double slope = left ? slopes.slope_minus : slopes.slope_plus;
  const double sign = left ? -1.0 : 1.0;
  const PotentialMatrix shifted = shift_potential(model, -slope);
  double prev = kNaN;
  for (double mag = 1.0; mag <= kEndpointSCap; mag *= 2.0) {
    const double d = legendre_value_shifted(shifted, sign * mag, tol, model.m());
    if (std::isfinite(prev) && std::abs(d - prev) < kEndpointStep) {
      SpectrumPoint out;
      out.alpha = alpha;
      out.s_alpha = sign * kInf;
      out.P_at_s = kNaN;
      out.Pprime_at_s = slope;
      out.dim = clamp_dim(d);
      out.cls = left ? SpectrumClass::endpoint_left : SpectrumClass::endpoint_right;
      return out;
    }
    prev = d;
  }
  throw LimitNonconvergenceError(
      "endpoint dimension limit did not stabilize by |s| = 2^20 (alpha = " +
      std::to_string(alpha) + ")");
}

}  // namespace

const char* to_string(SpectrumClass c) {
  switch (c) {
    case SpectrumClass::interior: return "interior";
    case SpectrumClass::endpoint_left: return "endpoint_left";
    case SpectrumClass::endpoint_right: return "endpoint_right";
    case SpectrumClass::empty: return "empty";
  }
  return "?";
}

SpectrumPoint legendre_point(const PotentialMatrix& model, double alpha, double tol) {
  if (model.is_constant()) throw ConstantPotentialError("legendre_point: potential is constant");
  if (!std::isfinite(alpha)) throw InvalidInputError("legendre_point: alpha must be finite");

  const EndpointSlopes slopes = endpoint_slopes(model);
  if (alpha < slopes.slope_minus - kEdgeTol || alpha > slopes.slope_plus + kEdgeTol) {
    SpectrumPoint out;
    out.alpha = alpha;
    out.s_alpha = kNaN;
    out.P_at_s = kNaN;
    out.Pprime_at_s = kNaN;
    out.dim = kNaN;
    out.cls = SpectrumClass::empty;
    return out;
  }
  if (std::abs(alpha - slopes.slope_minus) <= kEdgeTol)
    return endpoint_limit(model, alpha, /*left=*/true, slopes, tol);
  if (std::abs(alpha - slopes.slope_plus) <= kEdgeTol)
    return endpoint_limit(model, alpha, /*left=*/false, slopes, tol);

  // Interior: P' is strictly increasing; expand a bracket, then
  // secant/bisection until |P'(s) - alpha| <= kRootFTol.
  const auto eval = [&](double s) { return pressure_derivative(model, s, tol); };
  double a = -1.0, b = 1.0;
  PressurePoint pa = eval(a), pb = eval(b);
  while (pb.Pprime < alpha) {
    a = b;
    pa = pb;
    b *= 2.0;
    if (b > 0x1p40) throw SolverFailureError("legendre_point: bracket expansion failed (right)");
    pb = eval(b);
  }
  while (pa.Pprime > alpha) {
    b = a;
    pb = pa;
    a *= 2.0;
    if (a < -0x1p40) throw SolverFailureError("legendre_point: bracket expansion failed (left)");
    pa = eval(a);
  }

  PressurePoint ps{};
  bool have = false;
  for (int it = 0; it < 200 && !have; ++it) {
    double s;
    const double ga = pa.Pprime - alpha, gb = pb.Pprime - alpha;
    if (ga == 0.0) { ps = pa; break; }
    if (gb == 0.0) { ps = pb; break; }
    s = b - gb * (b - a) / (gb - ga);  // secant through the bracket
    const double w = b - a;
    if (!(s > a + 1e-3 * w && s < b - 1e-3 * w)) s = 0.5 * (a + b);
    const PressurePoint p = eval(s);
    if (std::abs(p.Pprime - alpha) <= kRootFTol) {
      ps = p;
      have = true;
      break;
    }
    if (p.Pprime < alpha) {
      a = s;
      pa = p;
    } else {
      b = s;
      pb = p;
    }
  }
  if (!have && std::abs(ps.Pprime - alpha) > kRootFTol)
    throw SolverFailureError("legendre_point: root refinement stalled at alpha = " +
                             std::to_string(alpha));

  SpectrumPoint out;
  out.alpha = alpha;
  out.s_alpha = ps.s;
  out.P_at_s = ps.P;
  out.Pprime_at_s = ps.Pprime;
  out.dim = clamp_dim((ps.P - ps.s * ps.Pprime) / (2.0 * std::log(static_cast<double>(model.m()))));
  out.cls = SpectrumClass::interior;
  return out;
}

std::vector<SpectrumPoint> spectrum_curve(const PotentialMatrix& model, int n_points, double tol) {
  if (n_points < 3) throw InvalidInputError("spectrum_curve: n_points must be >= 3");
  const EndpointSlopes slopes = endpoint_slopes(model);
  std::vector<SpectrumPoint> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n_points - 1);
    const double alpha = slopes.slope_minus + frac * (slopes.slope_plus - slopes.slope_minus);
    if (i == 0) {
      out.push_back(endpoint_limit(model, alpha, /*left=*/true, slopes, tol));
    } else if (i == n_points - 1) {
      out.push_back(endpoint_limit(model, alpha, /*left=*/false, slopes, tol));
    } else {
      out.push_back(legendre_point(model, alpha, tol));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximum-entropy inner solver.

namespace {

struct AffineFit {
  bool dependent = false;
  double a = 0.0;  // f2 ~= a f1 + b
  double b = 0.0;
};

bool is_constant_vec(const std::vector<double>& f, double* value = nullptr) {
  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
  if (*hi - *lo <= 1e-14 * scale) {
    if (value) *value = 0.5 * (*lo + *hi);
    return true;
  }
  return false;
}

// Least-squares f2 = a f1 + b; dependent when the residual is at rounding level.
AffineFit fit_affine(const std::vector<double>& f1, const std::vector<double>& f2) {
  const double n = static_cast<double>(f1.size());
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    m1 += f1[i];
    m2 += f2[i];
  }
  m1 /= n;
  m2 /= n;
  double var = 0.0, cov = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    var += (f1[i] - m1) * (f1[i] - m1);
    cov += (f1[i] - m1) * (f2[i] - m2);
  }
  AffineFit fit;
  if (var == 0.0) return fit;
  fit.a = cov / var;
  fit.b = m2 - fit.a * m1;
  double resid = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    resid = std::max(resid, std::abs(f2[i] - fit.a * f1[i] - fit.b));
    scale = std::max({scale, std::abs(f2[i]), std::abs(fit.a * f1[i] + fit.b)});
  }
  fit.dependent = resid <= 1e-12 * scale;
  return fit;
}

std::vector<double> softmax_vec(const std::vector<double>& xs) {
  const double lse = log_sum_exp(xs);
  std::vector<double> p(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) p[i] = std::exp(xs[i] - lse);
  return p;
}

double moment(const std::vector<double>& p, const std::vector<double>& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * f[i];
  return acc;
}

// Single-constraint dual: p ~ exp(lambda f) with E f = beta, by bisection on
// the monotone moment map. Targets at the range boundary are reached in the
// large-|lambda| limit, where the weights concentrate on the arg-extreme set.
struct Dual1D {
  std::vector<double> weights;
  double lambda = 0.0;
};

Dual1D solve_dual_1d(const std::vector<double>& f, double beta, double tol) {
  const auto [lo_it, hi_it] = std::minmax_element(f.begin(), f.end());
  const double flo = *lo_it, fhi = *hi_it;
  const double scale = std::max({1.0, std::abs(flo), std::abs(fhi)});
  const double slack = std::max(tol, 1e-12) * scale;
  if (beta < flo - slack || beta > fhi + slack)
    throw InfeasibleError("moment target outside the range of f");
  beta = std::clamp(beta, flo, fhi);
  if (fhi - flo <= 1e-14 * scale) {
    Dual1D out;
    out.weights.assign(f.size(), 1.0 / static_cast<double>(f.size()));
    return out;
  }
  const double atol = tol * scale;
  const double range = fhi - flo;
  const double lam_cap =
      std::max(1e4, (2.0 / std::max(tol, 1e-14)) *
                        std::log(2.0 * static_cast<double>(f.size()) * std::max(range, 1.0) /
                                 std::max(tol, 1e-14)));

  const auto weights_at = [&](double lam) {
    std::vector<double> xs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) xs[i] = lam * f[i];
    return softmax_vec(xs);
  };

  double lo = -lam_cap, hi = lam_cap;
  Dual1D out;
  for (int it = 0; it < 500; ++it) {
    const double mid = 0.5 * (lo + hi);
    out.weights = weights_at(mid);
    out.lambda = mid;
    const double g = moment(out.weights, f);
    if (std::abs(g - beta) <= atol) return out;
    (g < beta ? lo : hi) = mid;
  }
  // lam_cap is sized so the reachable moment range covers [flo, fhi] to
  // within atol; the bisection must hit the target long before 500 halvings.
  throw SolverFailureError("1-D moment bisection stalled");
}

MaxEntSolution from_weights(std::vector<double> w, double l1, double l2) {
  MaxEntSolution out;
  out.entropy = entropy_nat(w);
  out.weights = std::move(w);
  out.lambda1 = l1;
  out.lambda2 = l2;
  return out;
}

}  // namespace

MaxEntSolution max_entropy_dual(const std::vector<double>& f1, const std::vector<double>& f2,
                                double beta1, double beta2, double tol) {
  if (f1.size() != f2.size() || f1.empty())
    throw InvalidInputError("max_entropy_dual: f1, f2 must have equal nonzero length");
  if (!(tol > 0.0)) throw InvalidInputError("max_entropy_dual: tol must be > 0");
  if (!std::isfinite(beta1) || !std::isfinite(beta2))
    throw InvalidInputError("max_entropy_dual: moments must be finite");

  double c1 = 0.0, c2 = 0.0;
  const bool const1 = is_constant_vec(f1, &c1);
  const bool const2 = is_constant_vec(f2, &c2);
  const auto consistent = [&](double want, double have, double sc) {
    return std::abs(want - have) <= std::max(tol, 1e-12) * std::max(1.0, std::abs(sc));
  };

  if (const1 && const2) {
    if (!consistent(beta1, c1, c1) || !consistent(beta2, c2, c2))
      throw InfeasibleError("constant factors force beta1 = c1, beta2 = c2");
    return from_weights(std::vector<double>(f1.size(), 1.0 / static_cast<double>(f1.size())), 0.0,
                        0.0);
  }
  if (const1) {
    if (!consistent(beta1, c1, c1)) throw InfeasibleError("constant f1 forces beta1 = c1");
    Dual1D d = solve_dual_1d(f2, beta2, tol);
    return from_weights(std::move(d.weights), 0.0, d.lambda);
  }
  if (const2) {
    if (!consistent(beta2, c2, c2)) throw InfeasibleError("constant f2 forces beta2 = c2");
    Dual1D d = solve_dual_1d(f1, beta1, tol);
    return from_weights(std::move(d.weights), d.lambda, 0.0);
  }
  const AffineFit fit = fit_affine(f1, f2);
  if (fit.dependent) {
    // E f2 = a E f1 + b is forced; the second constraint is redundant or
    // contradictory.
    if (!consistent(beta2, fit.a * beta1 + fit.b, beta2))
      throw InfeasibleError("dependent factors: beta2 != a*beta1 + b");
    Dual1D d = solve_dual_1d(f1, beta1, tol);
    return from_weights(std::move(d.weights), d.lambda, 0.0);
  }

  // Independent pair: damped 2-D Newton on the convex dual
  // D(lambda) = LSE(lambda . (f1, f2)) - lambda . beta.
  const double scale =
      std::max({1.0, sup_norm(f1), sup_norm(f2), std::abs(beta1), std::abs(beta2)});
  const double slack = std::max(tol, 1e-12) * scale;
  const auto in_range = [&](const std::vector<double>& f, double b) {
    const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
    return b >= *lo - slack && b <= *hi + slack;
  };
  if (!in_range(f1, beta1) || !in_range(f2, beta2))
    throw InfeasibleError("moment target outside the factor ranges");

  const double atol = tol * scale;
  const std::size_t n = f1.size();
  // Damped Newton on the moment-matching residual G(lambda) = E f - beta;
  // the Jacobian is the (f1, f2) covariance under the current weights. Steps
  // are accepted on residual decrease, so convergence is driven by the
  // quantity the contract is about.
  const auto residual_at = [&](double a1, double a2, std::vector<double>* w, double* m1,
                               double* m2) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = a1 * f1[i] + a2 * f2[i];
    std::vector<double> p = softmax_vec(xs);
    const double e1 = moment(p, f1), e2 = moment(p, f2);
    if (w) *w = std::move(p);
    if (m1) *m1 = e1;
    if (m2) *m2 = e2;
    return std::hypot(e1 - beta1, e2 - beta2);
  };

  double l1 = 0.0, l2 = 0.0;
  std::vector<double> p;
  double m1 = 0.0, m2 = 0.0;
  double r = residual_at(l1, l2, &p, &m1, &m2);
  for (int it = 0; it < 200 && r > atol; ++it) {
    double v11 = 0.0, v22 = 0.0, v12 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      v11 += p[i] * (f1[i] - m1) * (f1[i] - m1);
      v22 += p[i] * (f2[i] - m2) * (f2[i] - m2);
      v12 += p[i] * (f1[i] - m1) * (f2[i] - m2);
    }
    double det = v11 * v22 - v12 * v12;
    const double ridge = 1e-13 * (v11 + v22) + 1e-300;
    if (det <= ridge * (v11 + v22)) {
      v11 += ridge;
      v22 += ridge;
      det = v11 * v22 - v12 * v12;
    }
    const double g1 = beta1 - m1, g2 = beta2 - m2;
    const double d1 = (v22 * g1 - v12 * g2) / det;
    const double d2 = (v11 * g2 - v12 * g1) / det;

    double t = 1.0;
    bool stepped = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      std::vector<double> pw;
      double w1 = 0.0, w2 = 0.0;
      const double rt = residual_at(l1 + t * d1, l2 + t * d2, &pw, &w1, &w2);
      if (rt < r) {
        l1 += t * d1;
        l2 += t * d2;
        r = rt;
        p = std::move(pw);
        m1 = w1;
        m2 = w2;
        stepped = true;
        break;
      }
    }
    // A stall or a runaway lambda means the target sits on or outside the
    // achievable moment hull: no interior dual solution exists.
    if (!stepped || std::max(std::abs(l1), std::abs(l2)) > 1e12) break;
  }
  if (r <= atol) return from_weights(std::move(p), l1, l2);
  if (!std::isfinite(r))
    throw SolverFailureError("max_entropy_dual: non-finite residual at beta1=" +
                             std::to_string(beta1) + ", beta2=" + std::to_string(beta2));
  throw InfeasibleError("moment target (" + std::to_string(beta1) + ", " + std::to_string(beta2) +
                        ") is outside the achievable (f1, f2) hull");
}

// ---------------------------------------------------------------------------
// Outer search over beta1.

namespace detail {

std::vector<std::pair<double, double>> feasible_beta1_intervals(double lo1, double hi1, double lo2,
                                                                double hi2, double alpha) {
  std::vector<std::pair<double, double>> out;
  if (alpha == 0.0) throw InvalidInputError("feasible_beta1_intervals: alpha must be nonzero");
  constexpr double kTiny = 1e-300;
  // beta1 > 0
  if (hi1 > 0.0) {
    double lo = std::max(lo1, kTiny), hi = hi1;
    bool ok = true;
    if (alpha > 0.0) {
      if (hi2 <= 0.0) ok = false;
      else {
        lo = std::max(lo, alpha / hi2);
        if (lo2 > 0.0) hi = std::min(hi, alpha / lo2);
      }
    } else {
      if (lo2 >= 0.0) ok = false;
      else {
        lo = std::max(lo, alpha / lo2);
        if (hi2 < 0.0) hi = std::min(hi, alpha / hi2);
      }
    }
    if (ok && lo <= hi) out.emplace_back(lo, hi);
  }
  // beta1 < 0
  if (lo1 < 0.0) {
    double lo = lo1, hi = std::min(hi1, -kTiny);
    bool ok = true;
    if (alpha > 0.0) {
      if (lo2 >= 0.0) ok = false;
      else {
        hi = std::min(hi, alpha / lo2);
        if (hi2 < 0.0) lo = std::max(lo, alpha / hi2);
      }
    } else {
      if (hi2 <= 0.0) ok = false;
      else {
        hi = std::min(hi, alpha / hi2);
        if (lo2 > 0.0) lo = std::max(lo, alpha / lo2);
      }
    }
    if (ok && lo <= hi) out.emplace_back(lo, hi);
  }
  return out;
}

}  // namespace detail

InvariantSpectrumPoint invariant_spectrum(const PotentialMatrix& model, double alpha, double tol) {
  if (!model.has_factors())
    throw UnsupportedModelError("invariant_spectrum: model was not built from factors");
  if (!std::isfinite(alpha)) throw InvalidInputError("invariant_spectrum: alpha must be finite");
  if (!(tol > 0.0)) throw InvalidInputError("invariant_spectrum: tol must be > 0");

  const std::vector<double>& f1 = model.f1();
  const std::vector<double>& f2 = model.f2();
  const double logm = std::log(static_cast<double>(model.m()));

  InvariantSpectrumPoint out;
  out.alpha = alpha;
  double best = -kInf;
  const auto consider = [&](double b1, double b2) {
    try {
      MaxEntSolution sol = max_entropy_dual(f1, f2, b1, b2, tol);
      if (sol.entropy > best) {
        best = sol.entropy;
        out.value = std::min(1.0, sol.entropy / logm);
        out.beta1 = b1;
        out.beta2 = b2;
        out.weights = std::move(sol.weights);
      }
      return sol.entropy;
    } catch (const InfeasibleError&) {
      return -kInf;
    }
  };

  double c1 = 0.0, c2 = 0.0;
  const bool const1 = is_constant_vec(f1, &c1);
  const bool const2 = is_constant_vec(f2, &c2);
  const double feas_slack = std::max(tol, 1e-12) * std::max({1.0, std::abs(alpha)});

  if (const1 || const2) {
    // The product of moments degenerates to a linear (or empty) constraint.
    const double c = const1 ? c1 : c2;
    if (c == 0.0) {
      // One factor integrates to 0 identically, so only alpha = 0 is
      // reachable, and then every weight vector qualifies: uniform wins.
      if (std::abs(alpha) <= feas_slack)
        consider(const1 ? 0.0 : mean_of(f1), const1 ? mean_of(f2) : 0.0);
    } else if (const1) {
      consider(c1, alpha / c1);
    } else {
      consider(alpha / c2, c2);
    }
    return out;
  }

  const AffineFit fit = fit_affine(f1, f2);
  if (fit.dependent) {
    // beta2 = a beta1 + b is forced, so beta1 (a beta1 + b) = alpha: the
    // feasible beta1 set is the real roots of a x^2 + b x - alpha = 0.
    double disc = fit.b * fit.b + 4.0 * fit.a * alpha;
    if (disc >= -1e-12 * std::max(1.0, std::abs(fit.b * fit.b) + std::abs(4.0 * fit.a * alpha))) {
      disc = std::max(disc, 0.0);
      const double sq = std::sqrt(disc);
      for (const double root : {(-fit.b + sq) / (2.0 * fit.a), (-fit.b - sq) / (2.0 * fit.a)}) {
        consider(root, fit.a * root + fit.b);
      }
    }
    return out;
  }

  // Independent factors.
  const auto [lo1_it, hi1_it] = std::minmax_element(f1.begin(), f1.end());
  const auto [lo2_it, hi2_it] = std::minmax_element(f2.begin(), f2.end());
  if (alpha == 0.0) {
    // Either moment may vanish, the other is unconstrained.
    if (*lo1_it <= 0.0 && *hi1_it >= 0.0) {
      try {
        Dual1D d = solve_dual_1d(f1, 0.0, tol);
        const double b2 = moment(d.weights, f2);
        const double h = entropy_nat(d.weights);
        if (h > best) {
          best = h;
          out.value = std::min(1.0, h / logm);
          out.beta1 = 0.0;
          out.beta2 = b2;
          out.weights = std::move(d.weights);
        }
      } catch (const InfeasibleError&) {
      }
    }
    if (*lo2_it <= 0.0 && *hi2_it >= 0.0) {
      try {
        Dual1D d = solve_dual_1d(f2, 0.0, tol);
        const double b1 = moment(d.weights, f1);
        const double h = entropy_nat(d.weights);
        if (h > best) {
          best = h;
          out.value = std::min(1.0, h / logm);
          out.beta1 = b1;
          out.beta2 = 0.0;
          out.weights = std::move(d.weights);
        }
      } catch (const InfeasibleError&) {
      }
    }
    return out;
  }

  const auto intervals =
      detail::feasible_beta1_intervals(*lo1_it, *hi1_it, *lo2_it, *hi2_it, alpha);
  constexpr int kGrid = 256;
  for (const auto& [lo, hi] : intervals) {
    if (hi - lo <= 1e-14 * std::max(1.0, std::abs(lo))) {
      consider(0.5 * (lo + hi), alpha / (0.5 * (lo + hi)));
      continue;
    }
    int best_idx = -1;
    double best_here = -kInf;
    std::vector<double> xs(kGrid);
    for (int k = 0; k < kGrid; ++k) {
      xs[static_cast<std::size_t>(k)] = lo + (hi - lo) * static_cast<double>(k) / (kGrid - 1);
      const double h = consider(xs[static_cast<std::size_t>(k)], alpha / xs[static_cast<std::size_t>(k)]);
      if (h > best_here) {
        best_here = h;
        best_idx = k;
      }
    }
    if (best_idx < 0) continue;
    // Golden-section refinement around the best grid point; the objective
    // need not be concave globally, but is smooth near a maximizer.
    double a = xs[static_cast<std::size_t>(std::max(0, best_idx - 1))];
    double b = xs[static_cast<std::size_t>(std::min(kGrid - 1, best_idx + 1))];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double h1 = consider(x1, alpha / x1), h2 = consider(x2, alpha / x2);
    for (int it = 0; it < 80 && (b - a) > 1e-12 * std::max(1.0, std::abs(a)); ++it) {
      if (h1 < h2) {
        a = x1;
        x1 = x2;
        h1 = h2;
        x2 = a + gr * (b - a);
        h2 = consider(x2, alpha / x2);
      } else {
        b = x2;
        x2 = x1;
        h2 = h1;
        x1 = b - gr * (b - a);
        h1 = consider(x1, alpha / x1);
      }
    }
  }
  return out;
}

}  // namespace mfa
