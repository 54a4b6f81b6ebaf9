#include "zetalab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace zetalab {

QuadratureResult tanh_sinh_unit(const UnitIntegrand& f, const Real& target,
                                const Real& endpoint_margin, int max_level) {
  Real margin = endpoint_margin;
  if (margin < Real(0.02)) margin = Real(0.02);
  if (margin > 1) margin = Real(1);
  const Real p = pi();
  // Beyond x_max the weight times the strongest admissible singularity is
  // below 10^-(D+5).
  const Real x_max =
      asinh(Real(Precision::working_digits() + 5) * log(Real(10)) / (p * margin));

  int nodes = 0;
  auto sample = [&](const Real& x) -> Cx {
    const Real ex = exp(x);
    const Real sh = (ex - 1 / ex) / 2;
    const Real ch = (ex + 1 / ex) / 2;
    const Real big = exp(p * sh);
    const Real u = big / (1 + big);
    const Real c = 1 / (1 + big);
    const Real w = p * ch * u * c;
    ++nodes;
    if (w == 0) return Cx();
    return f(u, c) * w;
  };

  Real h(Real(1) / 2);
  CompensatedSum<Cx> raw;
  raw.add(sample(Real(0)));
  for (int k = 1;; ++k) {
    const Real x = h * k;
    if (x > x_max) break;
    raw.add(sample(x));
    raw.add(sample(-x));
  }
  Cx previous = raw.value() * h;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    for (int k = 1;; k += 2) {
      const Real x = h * k;
      if (x > x_max) break;
      raw.add(sample(x));
      raw.add(sample(-x));
    }
    const Cx current = raw.value() * h;
    const Real err = abs(current - previous);
    if (level >= 2 && err <= target) {
      return QuadratureResult{current, err, nodes};
    }
    previous = current;
  }
  throw ConvergenceError("tanh-sinh quadrature did not reach target", -1,
                         log10_abs(target));
}

const GaussLegendreRule& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, long>, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(order, Precision::working_bits());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const Real p = pi();
  const Real eps = epsilon();
  for (int i = 0; i < (order + 1) / 2; ++i) {
    Real x = cos(p * (Real(i) + Real(0.75)) / (Real(order) + Real(0.5)));
    Real derivative;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0(1), p1 = x;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      derivative = order * (x * p1 - p0) / (x * x - 1);
      const Real dx = p1 / derivative;
      x -= dx;
      if (abs(dx) <= eps * 4) break;
    }
    {
      Real p0(1), p1 = x;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      derivative = order * (x * p1 - p0) / (x * x - 1);
    }
    const Real w = 2 / ((1 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0;
  return cache.emplace(key, std::move(rule)).first->second;
}

Cx integrate_panels(const std::function<Cx(const Real&)>& f, const Real& a,
                    const Real& b, int panels, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const Real width = (b - a) / panels;
  const Real half = width / 2;
  CompensatedSum<Cx> sum;
  for (int p = 0; p < panels; ++p) {
    const Real mid = a + width * p + half;
    for (int i = 0; i < order; ++i) {
      sum.add(f(mid + half * rule.nodes[i]) * rule.weights[i]);
    }
  }
  return sum.value() * half;
}

QuadratureResult integrate_smooth(const std::function<Cx(const Real&)>& f,
                                  const Real& a, const Real& b,
                                  const Real& target, int initial_panels,
                                  int max_doublings) {
  constexpr int kOrder = 24;
  int panels = initial_panels;
  int nodes = panels * kOrder;
  Cx previous = integrate_panels(f, a, b, panels, kOrder);
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    nodes += panels * kOrder;
    const Cx current = integrate_panels(f, a, b, panels, kOrder);
    const Real err = abs(current - previous);
    if (err <= target) return QuadratureResult{current, err, nodes};
    previous = current;
  }
  throw ConvergenceError("panel quadrature did not reach target", -1,
                         log10_abs(target));
}

QuadratureResult integrate_symmetric_geometric(const std::function<Cx(const Real&)>& f,
                                               const Real& T, const Real& target) {
  if (!(T > 0)) throw DomainError("integrate_symmetric_geometric: T > 0");
  std::vector<Real> edges = {Real(0), std::min<Real>(Real(1) / 2, T)};
  while (edges.back() < T) edges.push_back(std::min<Real>(2 * edges.back(), T));
  CompensatedSum<Cx> total;
  QuadratureResult out;
  out.abs_error_estimate = 0;
  out.nodes_used = 0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    for (int sign : {1, -1}) {
      const QuadratureResult q =
          integrate_smooth(f, sign * edges[i], sign * edges[i + 1], target, 2);
      total.add(sign > 0 ? q.value : -q.value);
      out.abs_error_estimate += q.abs_error_estimate;
      out.nodes_used += q.nodes_used;
    }
  }
  out.value = total.value();
  return out;
}

QuadratureResult mellin_quadrature(const RealFunction& f, const Cx& s,
                                   int fold_parity, std::optional<Real> target) {
  if (fold_parity < -1 || fold_parity > 1) {
    throw DomainError("mellin_quadrature: fold_parity must be -1, 0 or +1");
  }
  if (fold_parity != 0 && !(s.re > 0 && s.re < 1)) {
    throw DomainError("mellin_quadrature: folding requires 0 < Re(s) < 1");
  }
  if (!(s.re > 0)) throw DomainError("mellin_quadrature: requires Re(s) > 0");

  const Real goal = target ? *target : tol(5);
  const Real one_minus = 1 - s.re;
  const Real margin = (s.re < one_minus ? s.re : one_minus) / 2;
  const Cx s_minus_one = s - Cx(1);
  const Cx minus_s = -s;
  const Cx minus_s_minus_one = -s - Cx(1);
  const Real parity(fold_parity);

  auto integrand = [&](const Real& u, const Real& c) -> Cx {
    const Real t2 = (2 - c) / c;
    const Real t = sqrt(t2);
    const Real dt_du = 1 / (t * c * c);
    const Real lt = log(t);
    const Real ft = f(t);
    Cx value = exp(s_minus_one * Cx(lt)) * ft;
    if (fold_parity != 0) {
      value += exp(minus_s * Cx(lt)) * (parity * ft);
    } else {
      value += exp(minus_s_minus_one * Cx(lt)) * f(1 / t);
    }
    (void)u;
    return value * dt_du;
  };
  return tanh_sinh_unit(integrand, goal, margin);
}

}  // namespace zetalab
