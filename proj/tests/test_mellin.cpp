#include "doctest.h"
#include "test_support.hpp"
#include "zetalab/mellin.hpp"

using namespace zetalab;
using zetalab::testing::C;
using zetalab::testing::R;

namespace {

std::vector<Cx> strip_points() { return {Cx(R("0.3")), Cx(R("0.5")), C("0.5", "5"), Cx(R("0.8"))}; }

}  // namespace

TEST_CASE("Mellin transform of Psi_m in closed form") {
  Precision p(30);
  const Cx half(R("0.5"));
  CHECK(abs(psi_mellin(0, half) - Cx(pow(gamma(Real(1) / 4), 2) / sqrt(2 * pi()))) < tol(2));
  CHECK(abs(psi_mellin(1, half)) < tol(2));
  CHECK(lemma3_check(0, half) < Real(1e-15));
  CHECK(lemma3_check(1, half) < Real(1e-15));
  CHECK(lemma3_check(2, Cx(R("0.3"))) < Real(1e-15));
  for (const Cx& s : strip_points())
    for (int m : {3, 7, 10}) CHECK(lemma3_check(m, s) < Real(1e-15));
  CHECK_THROWS_AS(lemma3_check(0, Cx(R("1.2"))), DomainError);
  CHECK_THROWS_AS(lemma3_check(13, half), DomainError);
}

TEST_CASE("theta-Mellin anchor against the zeta oracle") {
  Precision p(30);
  for (const Cx& s : strip_points()) CHECK(theta_mellin_anchor(s) < Real(1e-12));
  CHECK(abs(theta_minus_one(Real(2)) - R("0.0000069746847124179912793574557227733860848118193")) <
        tol(2));
}

TEST_CASE("pi/sin expansion") {
  Precision p(30);
  const std::vector<BigRational> c = pi_over_sin_coefficients(3);
  CHECK(c[0] == 1);
  CHECK(c[1] == BigRational(24, 2 * 6 * 16));
  CHECK(c[2] == BigRational(factorial(8), factorial(4) * factorial(5) * 256));
  const Cx half(R("0.5"));
  Real last(1);
  std::vector<Real> res;
  for (int M : {100, 400, 1600}) {
    const PartialAndReference r = pi_over_sin_expansion(half, M);
    CHECK(abs(r.reference - Cx(pi())) < tol(2));
    res.push_back(abs(r.partial - r.reference));
    CHECK(res.back() < last);
    last = res.back();
  }
  // all terms share a sign at s = 1/2; the tail decays like M^(-3/4)
  CHECK(abs(res[2] - R("0.00190506183813932722161656187101")) < Real(1e-25));
  for (size_t i = 1; i < res.size(); ++i) {
    const Real ratio = res[i - 1] / res[i];
    CHECK(ratio > R("2.7"));
    CHECK(ratio < R("2.95"));
  }
  const Cx z = C("0.3", "2");
  const PartialAndReference g1 = pi_over_sin_expansion(z, 200);
  const PartialAndReference g2 = pi_over_sin_expansion(z, 800);
  CHECK(abs(g2.partial - g2.reference) < abs(g1.partial - g1.reference));
}

TEST_CASE("term-by-term Mellin of the 1/(1+t) expansion") {
  Precision p(30);
  for (int M : {0, 1, 5, 20}) {
    CHECK(term_by_term_check(Cx(R("0.4")), M) < Real(1e-15));
    CHECK(term_by_term_check(C("0.5", "5"), M) < Real(1e-15));
  }
}

TEST_CASE("conjecture partial sums: machinery") {
  Precision p(30);
  const PartialAndReference r = zeta_conjecture_partial(Cx(R("0.5")), 0);
  CHECK(abs(r.reference - Cx(R("-1.46035450880958681288949915251529801246722933101258"))) <
        tol(2));
  const Cx want = Cx(sqrt(sqrt(pi())) * gamma(Real(1) / 4) / sqrt(2 * pi()) *
                     alpha_table(0).entries[0].alpha_2m);
  CHECK(abs(r.partial - want) < tol(2));
  const AlphaTable tab = alpha_table(8);
  CHECK(abs(abel_regularized_partial(Cx(R("0.5")), tab, Real(1)) -
            zeta_conjecture_partial(Cx(R("0.5")), tab).partial) < tol(2));
  const Cx tiny = abel_regularized_partial(Cx(R("0.5")), tab, R("1e-20"));
  CHECK(abs(tiny - zeta_conjecture_partial(Cx(R("0.5")), 0).partial) < Real(1e-30) + tol(2));
  CHECK(isfinite(abs(abel_regularized_partial(Cx(R("0.5")), 200, R("0.99")))));
}

TEST_CASE("conjecture identity: prefactor x term-wise Mellin = Gamma pi^(-s/2) x partial Mellin") {
  Precision p(30);
  for (int M : {0, 3, 20}) {
    CHECK(conjecture_identity_check(Cx(R("0.5")), M) < Real(1e-15));
    CHECK(conjecture_identity_check(C("0.25", "3"), M) < Real(1e-15));
  }
}

TEST_CASE("conjecture report: sorted, complete") {
  Precision p(20);
  const std::vector<Cx> grid = default_conjecture_grid();
  CHECK(grid.size() == 9);
  const std::vector<int> Ms = doubling_orders(16);
  CHECK(Ms == std::vector<int>{1, 2, 4, 8, 16});
  const ResidualReport rep = conjecture_report(grid, Ms);
  CHECK(rep.records.size() == 45);
  for (size_t i = 1; i < rep.records.size(); ++i) {
    const auto& a = rep.records[i - 1];
    const auto& b = rep.records[i];
    const bool ordered = a.point.re < b.point.re ||
                         (a.point.re == b.point.re &&
                          (a.point.im < b.point.im || (a.point.im == b.point.im && a.M < b.M)));
    CHECK(ordered);
  }
  for (const auto& r : rep.records) CHECK(r.residual == abs(r.partial - r.reference));
}

TEST_CASE("Hardy Z and the f_2m family") {
  Precision p(30);
  CHECK(abs(hardy_f2m(0, Real(0)) - sqrt(sqrt(pi())) * gamma(Real(1) / 4)) < tol(2));
  for (int m : {0, 1, 4}) CHECK(abs(hardy_f2m(m, R("2.7")) - hardy_f2m(m, R("-2.7"))) < tol(2));
  CHECK(abs(hardy_inner_product(0, 1)) < Real(1e-12));
  CHECK(abs(hardy_inner_product(1, 3)) < Real(1e-12));
  CHECK(hardy_inner_product(2, 2) > 0);
  const HardyPoint h = hardy_point(R("14.1347251417346937904572519835624702707842571156992"), 3);
  CHECK(abs(h.Z_ref) < Real(1e-25));
  CHECK(h.f2m_values.size() == 4);
  const HardyPoint z = hardy_point(Real(0), 0);
  CHECK(abs(z.Z_ref - R("-1.46035450880958681288949915251529801246722933101258")) < tol(2));
}
