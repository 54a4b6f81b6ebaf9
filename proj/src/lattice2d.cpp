#include "zetalab/lattice2d.hpp"

#include "zetalab/psi_basis.hpp"

#include <algorithm>

namespace zetalab {

namespace {

/// sum_{j>R} c(j) with c(j) = 8 j 2^(m/2) j^m exp(-pi j^2/2) g(j); terms summed
/// until they fall geometrically, remainder bounded by the ratio.
template <class Extra>
Real ring_tail(int m, int R, Extra extra) {
  const Real p = pi();
  const Real stop = pow(Real(10), -Real(Precision::working_digits() + 10));
  auto term = [&](int j) {
    const Real jj(j);
    return 8 * jj * pow(sqrt(Real(2)) * jj, m) * exp(-p * jj * jj / 2 + extra(jj));
  };
  Real sum(0);
  Real prev = term(R + 1);
  for (int j = R + 1;; ++j) {
    sum += prev;
    const Real next = term(j + 1);
    const Real ratio = next / prev;
    if (ratio < Real(1) / 2 && next < stop * (sum + stop)) return sum + 2 * next;
    prev = next;
    if (j > R + 100000) throw ConvergenceError("lattice tail did not decay", m, 0);
  }
}

int radius_for(int m, const std::function<Real(int)>& bound) {
  const Real goal = pow(Real(10), -Real(Precision::working_digits()));
  int R = std::max(2, static_cast<int>(std::ceil(std::sqrt(2.0 * m / 3.14159))));
  while (bound(R) >= goal) ++R;
  return R;
}

Real s0_theta() { return theta(SectorPoint(Real(1))).re; }

}  // namespace

Real lattice2d_truncation_bound(int m, int R) {
  return ring_tail(m, R, [](const Real&) { return Real(0); });
}

int lattice2d_radius(int m) {
  return radius_for(m, [m](int R) { return lattice2d_truncation_bound(m, R); });
}

TTable t_table(int M) {
  if (M < 0 || M > 200) throw DomainError("t_table: 0 <= M <= 200");
  const int R = lattice2d_radius(M);
  const Real p = pi();
  std::vector<CompensatedSum<Cx>> sums(M + 1);
  std::vector<Real> abs_sums(M + 1, Real(0));
  long points = 0;
  for (int k = -R; k <= R; ++k) {
    for (int l = -R; l <= R; ++l) {
      ++points;
      Real w = exp(-p * Real(k * k + l * l) / 2);
      if ((k * l) % 2) w = -w;
      const Cx z{Real(k), Real(l)};
      const Real az = abs(z);
      Cx zp(1);
      Real azp(1);
      for (int m = 0; m <= M; ++m) {
        sums[m].add(zp * w);
        abs_sums[m] += abs(w) * azp;
        zp *= z;
        azp *= az;
      }
    }
  }
  const Real unit = pow(Real(2), -Real(Precision::working_bits()));
  TTable out;
  for (int m = 0; m <= M; ++m) {
    TEntry e;
    e.m = m;
    e.T = sums[m].value();
    e.radius = R;
    // each term carries at most ~(8m + 8) unit roundoffs; compensated summation
    // adds O(u) relative to the absolute sum
    e.tail_bound = lattice2d_truncation_bound(m, R) + (8 * m + 16) * unit * abs_sums[m] * 2 +
                   Real(points) * unit * unit * abs_sums[m];
    out.entries.push_back(std::move(e));
  }
  return out;
}

TEntry compute_T(int m) {
  if (m < 0 || m > 200) throw DomainError("compute_T: 0 <= m <= 200");
  TTable t = t_table(m);
  return t.entries.back();
}

Real appendix_identity_check(int m) {
  if (m < 0 || m > 5) throw DomainError("appendix_identity_check: 0 <= m <= 5");
  const Real hermite_side = hermite_lattice_sum(4 * m).value;
  const TEntry T = compute_T(4 * m);
  const Real lattice_side =
      pow(2 * pi(), 2 * m) * T.T.re / (s0_theta() * sqrt(Real(2)));
  return abs(hermite_side - lattice_side) / abs(hermite_side);
}

Real s4m_reconstruction_check(int m) {
  if (m < 0 || m > 50) throw DomainError("s4m_reconstruction_check: 0 <= m <= 50");
  const TEntry T = compute_T(4 * m);
  const Real norm = exp(-4 * m * ln2() - lgamma(Real(2 * m + 1)));
  const Real lattice_side =
      norm * pow(2 * pi(), 2 * m) * T.T.re / (s0_theta() * sqrt(Real(2)));
  return abs(lattice_sum_S(4 * m).value - lattice_side);
}

Cx poisson_left(const Cx& u) {
  if (abs(u) > 2) throw DomainError("poisson_relation: |u| <= 2");
  const Real p = pi();
  const Real stop = pow(Real(10), -Real(Precision::working_digits() + 5));
  // |term| = exp(-pi n^2 + 2 pi n Re u + pi Im(u)^2/2 - pi Re(u)^2/2)
  const Cx shift = -p * u * u / 2;
  CompensatedSum<Cx> sum;
  sum.add(exp(shift));
  for (int n = 1;; ++n) {
    const Real nn(n);
    const Cx a = exp(Cx(-p * nn * nn) + u * (2 * p * nn) + shift);
    const Cx b = exp(Cx(-p * nn * nn) - u * (2 * p * nn) + shift);
    sum.add(a);
    sum.add(b);
    if (abs(a) + abs(b) < stop * abs(sum.value()) && nn > 2 * abs(u) + 2) break;
  }
  return sum.value();
}

Cx poisson_right(const Cx& u) {
  if (abs(u) > 2) throw DomainError("poisson_relation: |u| <= 2");
  const Real p = pi();
  const Real grow = p * abs(u);
  const int R = radius_for(0, [&](int r) {
    return ring_tail(0, r, [&](const Real& j) { return grow * sqrt(Real(2)) * j; });
  });
  CompensatedSum<Cx> sum;
  const Cx iu = Cx(Real(0), p) * u;
  for (int k = -R; k <= R; ++k) {
    for (int l = -R; l <= R; ++l) {
      Real w = exp(-p * Real(k * k + l * l) / 2);
      if ((k * l) % 2) w = -w;
      sum.add(exp(iu * Cx(Real(k), Real(l))) * w);
    }
  }
  return sum.value() / (s0_theta() * sqrt(Real(2)));
}

Real poisson_relation_check(const Cx& u) { return abs(poisson_left(u) - poisson_right(u)); }

Real hermite_generating_check(const Real& u, int n, int M) {
  if (!(abs(u) < 1)) throw DomainError("hermite_generating_check: |u| < 1");
  const Real p = pi();
  if (M <= 0) {
    // pi^(m/2) |u|^m / sqrt(m!) against 10^-(working digits), with |r_m| <~ 1
    const Real goal = -Real(Precision::working_digits() + 5) * log(Real(10));
    const Real lu = log(std::max<Real>(abs(u), Real(1e-300)));
    M = 1;
    while (M * (log(p) / 2 + lu) - lgamma(Real(M + 1)) / 2 > goal) ++M;
    M += 4;
  }
  const std::vector<Real> r = scaled_hermite_functions(M, Real(n));
  // (pi/2)^(m/2) Phi_m(n)/m! = r_m pi^(m/2)/sqrt(m!)
  CompensatedSum<Real> sum;
  Real coef(1);
  for (int m = 0; m <= M; ++m) {
    sum.add(r[m] * coef);
    coef *= sqrt(p / (m + 1)) * u;
  }
  const Real nn(n);
  const Real lhs = exp(-p * nn * nn + 2 * p * nn * u - p * u * u / 2);
  return abs(lhs - sum.value());
}

namespace {

struct GaussInt {
  BigInt re, im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

bool symmetry_check(int R, int max_power) {
  for (int k = -R; k <= R; ++k) {
    for (int l = -R; l <= R; ++l) {
      // weights: parity (-1)^(kl) and radius k^2 + l^2 must match exactly
      const GaussInt z{BigInt(k), BigInt(l)};
      const GaussInt neg{BigInt(-k), BigInt(-l)};
      const GaussInt rot{BigInt(l), BigInt(-k)};
      if (((-k) * (-l)) % 2 != (k * l) % 2 && ((-k) * (-l) + k * l) % 2) return false;
      if ((l * (-k) - k * l) % 2) return false;
      GaussInt zp{BigInt(1), BigInt(0)}, np = zp, rp = zp;
      for (int j = 1; j <= max_power; ++j) {
        zp = mul(zp, z);
        np = mul(np, neg);
        rp = mul(rp, rot);
        if (j % 2 == 1 && (np.re != -zp.re || np.im != -zp.im)) return false;
        if (j % 4 == 2 && (rp.re != -zp.re || rp.im != -zp.im)) return false;
      }
    }
  }
  return true;
}

}  // namespace zetalab
