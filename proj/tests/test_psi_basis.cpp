#include "doctest.h"
#include "test_support.hpp"
#include "zetalab/psi_basis.hpp"

using namespace zetalab;
using zetalab::testing::C;
using zetalab::testing::R;

TEST_CASE("SectorPoint: membership") {
  Precision p(30);
  CHECK_NOTHROW(SectorPoint(Real(1)));
  CHECK_NOTHROW(SectorPoint(C("1", "0.99")));
  CHECK_THROWS_AS(SectorPoint(C("1", "1")), DomainError);
  CHECK_THROWS_AS(SectorPoint(Real(-1)), DomainError);
  CHECK_THROWS_AS(SectorPoint(Real(0)), DomainError);
  CHECK_THROWS_AS(SectorPoint(C("1", "-1.2")), DomainError);
}

TEST_CASE("psi: values") {
  Precision p(50);
  CHECK(abs(psi(0, SectorPoint(Real(1))) - Cx(1)) < tol(2));
  for (int m = 1; m < 6; ++m) CHECK(abs(psi(m, SectorPoint(Real(1)))) < tol(2));
  const Real want = sqrt(Real(2)) * Real(9) / 25 / sqrt(Real(5));
  CHECK(abs(psi(2, SectorPoint(Real(2))) - Cx(want)) < tol(2));
  CHECK_THROWS_AS(psi(-1, SectorPoint(Real(1))), DomainError);
}

TEST_CASE("psi: reflection Psi_m(t) = (-1)^m (1/t) Psi_m(1/t) on 100 sector points") {
  Precision p(40);
  zetalab::testing::SplitMix rng(11);
  for (int i = 0; i < 100; ++i) {
    const Real r = exp(Real(rng.uniform(-2.0, 2.0)));
    const Real th = Real(rng.uniform(-0.75, 0.75));
    const Cx t(r * cos(th), r * sin(th));
    const SectorPoint a(t), b(Cx(1) / t);
    const int m = rng.integer(0, 40);
    const Cx lhs = psi(m, a);
    const Cx rhs = psi(m, b) / t * (m % 2 ? -1 : 1);
    CHECK(abs(lhs - rhs) < tol(2) * (1 + abs(lhs)));
  }
}

TEST_CASE("t_transform: basis property and linearity") {
  Precision p(40);
  const SectorFunction psi3 = [](const SectorPoint& t) { return psi(3, t); };
  CHECK(abs(t_transform(psi3, Cx(R("0.4"))) - Cx(R("0.064"))) < tol(2));
  const SectorFunction psi0 = [](const SectorPoint& t) { return psi(0, t); };
  CHECK(abs(t_transform(psi0, Cx(0)) - Cx(1)) < tol(2));
  const std::vector<Real> c = {R("0.5"), R("-2"), R("0"), R("3.25"), R("1e-3")};
  const SectorFunction combo = [&](const SectorPoint& t) {
    Cx s(0);
    for (size_t m = 0; m < c.size(); ++m) s += psi(static_cast<int>(m), t) * c[m];
    return s;
  };
  for (const Cx& u : {C("0.3", "0.2"), C("-0.7", "0.1"), C("0.05", "-0.9")}) {
    Cx want(0);
    for (size_t m = 0; m < c.size(); ++m) want += pow(u, static_cast<unsigned>(m)) * c[m];
    CHECK(abs(t_transform(combo, u) - want) < tol(2));
  }
  CHECK_THROWS_AS(t_transform(psi0, Cx(1)), DomainError);
  CHECK_THROWS_AS(t_transform(psi0, C("0.8", "0.8")), DomainError);
}

TEST_CASE("theta: values, Jacobi identity, parity of TG") {
  Precision p(50);
  CHECK(abs(theta(SectorPoint(Real(1))) -
            Cx(R("1.08643481121330801457531612151022345707020570724521888592079"))) < tol(2));
  CHECK(abs(theta(SectorPoint(Real(2))) -
            Cx(R("1.0000069746847124179912793574557227733860848118193"))) < tol(2));
  for (const Cx& t : {Cx(R("1.3")), C("0.8", "0.3"), C("2.5", "-1.9")}) {
    const Cx inv = Cx(1) / t;
    CHECK(abs(theta(SectorPoint(inv)) * inv - theta(SectorPoint(t))) < tol(2));
  }
  const SectorFunction G = [](const SectorPoint& t) { return theta(t); };
  for (const Cx& u : {C("0.4", "0"), C("0.2", "0.5"), C("-0.6", "0.3")}) {
    CHECK(abs(t_transform(G, u) - t_transform(G, -u)) < tol(2));
  }
  Precision q(15);
  CHECK(theta_terms(Cx(2)) <= 5);
}

TEST_CASE("expansions of 1/(1+t) and 1+1/t") {
  Precision p(40);
  const ExpansionSeries a = coeffs_one_over_one_plus_t(100);
  CHECK(a.exact[0] == BigRational(1, 2));
  CHECK(a.exact[1] == BigRational(1, 8));
  CHECK(a.coeffs.size() == 101);
  CHECK(abs(partial_sum(a, SectorPoint(Real(2))) - Cx(Real(1) / 3)) < Real(1e-30));
  const ExpansionSeries b = coeffs_one_plus_one_over_t(100);
  CHECK(b.exact[0] == BigRational(2));
  CHECK(abs(partial_sum(coeffs_one_plus_one_over_t(0), SectorPoint(Real(1))) - Cx(2)) < tol(2));
  CHECK(abs(partial_sum(b, SectorPoint(Real(2))) - Cx(Real(3) / 2)) < Real(1e-30));
  const Cx t = C("0.9", "0.4");
  CHECK(abs(partial_sum(a, SectorPoint(t)) - Cx(1) / (Cx(1) + t)) < Real(1e-20));
}

TEST_CASE("alpha_table") {
  Precision p(50);
  const AlphaTable tab = alpha_table(40);
  REQUIRE(tab.entries.size() == 41);
  CHECK(abs(tab.entries[0].alpha_2m -
            R("-0.91356518878669198542468387848977654292979429275478")) < tol(2));
  CHECK(tab.entries[0].binom_term == 2);
  for (const AlphaEntry& e : tab.entries) {
    CHECK(e.alpha_2m == e.S_4m - e.binom_term);
    CHECK(e.tail_bound < tol(5));
  }
  const Real ratio = to_real(alpha_binom_term(1000)) / (2 / sqrt(2 * pi() * 1000));
  CHECK(abs(ratio - 1) < Real(1e-3));
}

TEST_CASE("alpha and lattice partial sums of the theta function") {
  Precision p(50);
  const AlphaTable tab = alpha_table(60);
  const Cx g1 = theta(SectorPoint(Real(1)));
  CHECK(abs(theorem_partial_sum(SectorPoint(Real(1)), 0) - (g1 - Cx(2))) < tol(2));
  CHECK(abs(theorem_partial_sum(SectorPoint(Real(2)), 0) -
            Cx(R("-0.57778935752153281340697394184334586575035561240643"))) < tol(2));
  CHECK(abs(lemma2_partial_sum(SectorPoint(Real(1)), tab) - g1) < tol(2));
  for (const Cx& t : {Cx(R("1.4")), C("0.9", "0.2")}) {
    const SectorPoint s(t);
    const Cx want = theta(s) - Cx(1) - Cx(1) / t;
    CHECK(abs(theorem_partial_sum(s, tab) - want) < Real(1e-15));
    CHECK(abs(lemma2_partial_sum(s, tab) - theta(s)) < Real(1e-15));
  }
}

TEST_CASE("Gaussian convolution identity for Psi_m") {
  Precision p(40);
  CHECK(lemma1_convolution_check(0, Real(1)) < tol(5));
  CHECK(lemma1_convolution_check(1, Real(2)) < tol(5));
  CHECK(lemma1_convolution_check(4, R("0.7")) < tol(5));
  CHECK(lemma1_convolution_check(20, R("1.6")) < tol(5));
  const Real big(1000);
  CHECK(abs(psi(0, SectorPoint(big)).re * big - sqrt(Real(2))) < Real(1e-5));
  CHECK_THROWS_AS(lemma1_convolution_check(21, Real(1)), DomainError);
}

TEST_CASE("Gaussian expansion in Psi_m") {
  Precision p(40);
  CHECK(eq1_residual(R("0.7"), SectorPoint(R("1.2")), 120) < Real(1e-20));
  CHECK(eq1_residual(R("1.3"), SectorPoint(C("1.1", "0.3")), 200) < Real(1e-20));
}

TEST_CASE("absolute majorant is finite and converges") {
  Precision p(30);
  const SectorPoint t(R("1.3"));
  const Real a = lemma2_absolute_majorant(t, 60);
  const Real b = lemma2_absolute_majorant(t, 120);
  CHECK(isfinite(b));
  CHECK(b - a < Real(1e-10));
}

TEST_CASE("full-lattice form of alpha agrees with the binomial form") {
  Precision p(40);
  for (int m : {0, 1, 3, 10, 25}) CHECK(remark_alpha_check(m) < tol(5));
}
