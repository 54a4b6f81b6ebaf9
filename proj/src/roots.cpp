#include "zetalab/qpoly.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Eigenvalues>

#include <algorithm>

namespace zetalab {

namespace {

using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

std::vector<Cx> companion_eigenvalues(const std::vector<BigRational>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Precision high(2 * Precision::digits());
  const Real lead = to_real(c.back());
  Mat A = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) A(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) A(i, n - 1) = -to_real(c[i]) / lead;
  Eigen::EigenSolver<Mat> es(A, false);
  if (es.info() != Eigen::Success) throw RootFindingError("companion eigenvalues did not converge");
  std::vector<Cx> out;
  for (int i = 0; i < n; ++i) out.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag());
  return out;
}

struct Polished {
  Cx root;
  Real residual;
};

Polished newton(const std::vector<Real>& c, Cx z) {
  const Real eps = pow(Real(10), -Real(Precision::working_digits() - 2));
  auto eval = [&](const Cx& x, Cx& d, Real& mag) {
    Cx p(0);
    d = Cx(0);
    mag = 0;
    const Real ax = abs(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      d = d * x + p;
      p = p * x + Cx(*it);
      mag = mag * ax + abs(*it);
    }
    return p;
  };
  for (int it = 0; it < 200; ++it) {
    Cx d;
    Real mag;
    const Cx p = eval(z, d, mag);
    if (p.re == 0 && p.im == 0) return {z, Real(0)};
    if (d.re == 0 && d.im == 0) throw RootFindingError("Newton: zero derivative");
    const Cx step = p / d;
    z -= step;
    if (abs(step) <= eps * std::max<Real>(Real(1), abs(z))) {
      const Cx p2 = eval(z, d, mag);
      return {z, abs(p2) / mag};
    }
  }
  throw RootFindingError("Newton polishing stalled");
}

std::vector<Polished> polish_all(const std::vector<BigRational>& coeffs) {
  if (coeffs.empty() || coeffs.back() == 0) throw RootFindingError("polynomial has no leading term");
  std::vector<Polished> out;
  if (coeffs.size() == 1) return out;
  const std::vector<Cx> start = companion_eigenvalues(coeffs);
  std::vector<Real> c;
  for (const auto& q : coeffs) c.push_back(to_real(q));
  for (const Cx& z : start) out.push_back(newton(c, z));
  const Real sep = pow(Real(10), -Real(Precision::digits()) / 2);
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (abs(out[i].root - out[j].root) < sep * std::max<Real>(Real(1), abs(out[i].root)))
        throw RootFindingError("polished roots collided");
  return out;
}

}  // namespace

RootSet real_polynomial_roots(const std::vector<BigRational>& coeffs) {
  const std::vector<Polished> pol = polish_all(coeffs);
  const Real real_tol = tol(10);
  RootSet out;
  out.max_residual = 0;
  out.max_imag = 0;
  out.all_real_confirmed = true;
  for (const Polished& p : pol) {
    out.max_residual = std::max(out.max_residual, p.residual);
    const Real im = abs(p.root.im);
    out.max_imag = std::max(out.max_imag, im);
    if (im >= real_tol) out.all_real_confirmed = false;
    out.roots_t.push_back(p.root.re);
  }
  std::sort(out.roots_t.begin(), out.roots_t.end());
  return out;
}

ComplexRootSet complex_polynomial_roots(const std::vector<BigRational>& coeffs) {
  const std::vector<Polished> pol = polish_all(coeffs);
  ComplexRootSet out;
  out.max_residual = 0;
  for (const Polished& p : pol) {
    out.max_residual = std::max(out.max_residual, p.residual);
    out.roots.push_back(p.root);
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Cx& a, const Cx& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  return out;
}

}  // namespace zetalab
