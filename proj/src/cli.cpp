#include "zetalab/cli.hpp"

#include "zetalab/hermite.hpp"
#include "zetalab/laguerre.hpp"
#include "zetalab/lattice2d.hpp"
#include "zetalab/mellin.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/psi_basis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace zetalab::cli {

namespace {

std::string num(const Real& x) { return to_string(x); }
std::string num(int x) { return std::to_string(x); }

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Real parse_real(const std::string& text, const char* what) {
  try {
    return Real(trim(text));
  } catch (const std::exception&) {
    throw ConfigError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

int max_m_or(const RunConfig& c, int fallback, int lo, int hi) {
  const int m = c.max_m.value_or(fallback);
  if (m < lo || m > hi)
    throw ConfigError("max-m for " + c.command + " must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return m;
}

/// Points strictly inside the critical strip.
std::vector<Cx> strip_grid(const RunConfig& c) {
  std::vector<Cx> g = c.grid.empty() ? default_conjecture_grid() : parse_grid(c.grid);
  for (const Cx& s : g)
    if (!(s.re > 0 && s.re < 1)) throw ConfigError("grid point outside 0 < Re s < 1");
  return g;
}

}  // namespace

std::string render_csv(const Table& t) {
  auto field = [](const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string q = "\"";
    for (char ch : f) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += field(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o = nlohmann::ordered_json::object();
    for (size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r.at(i);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& t, OutputFormat f) {
  return f == OutputFormat::csv ? render_csv(t) : render_json(t);
}

std::vector<Cx> parse_grid(const std::string& text) {
  std::vector<Cx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      out.emplace_back(parse_real(item, "grid point"));
    } else {
      out.emplace_back(parse_real(item.substr(0, comma), "grid point"),
                       parse_real(item.substr(comma + 1), "grid point"));
    }
  }
  if (out.empty()) throw ConfigError("empty grid");
  return out;
}

void validate(const RunConfig& c) {
  static const std::vector<std::string> known = {"coeffs",     "qpoly",    "verify",
                                                 "conjecture", "laguerre", "appendix"};
  if (std::find(known.begin(), known.end(), c.command) == known.end())
    throw ConfigError("unknown command '" + c.command + "'");
  if (c.precision_digits < 30 || c.precision_digits > 2000)
    throw ConfigError("precision must lie in [30, 2000]");
  if (c.m < 0) throw ConfigError("m must be nonnegative");
  if (!c.abel.empty() && c.command != "conjecture")
    throw ConfigError("abel applies to conjecture only");
}

CommandResult cmd_coeffs(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  const int M = max_m_or(c, 20, 0, 50);
  const AlphaTable alpha = alpha_table(M);
  const TTable T = t_table(4 * M);
  const SigmaTable sigma = coeff_tables(M);
  CommandResult r;
  r.table.header = {"m",        "precision",       "S_4m",        "binom_term",   "alpha_2m",
                    "alpha_tail_bound", "T_4m_re", "T_4m_im",     "T_4m_tail_bound", "s_m",
                    "s_tail_bound",     "sigma_m", "c_m",         "sigma_minus_pi_c",
                    "sigma_error_bound"};
  for (int m = 0; m <= M; ++m) {
    const AlphaEntry& a = alpha.entries[m];
    const TEntry& t = T.entries[4 * m];
    const SigmaEntry& s = sigma.entries[m];
    r.table.rows.push_back({num(m), num(c.precision_digits), num(a.S_4m), num(a.binom_term),
                            num(a.alpha_2m), num(a.tail_bound), num(t.T.re), num(t.T.im),
                            num(t.tail_bound), num(s.s_m), num(s.s_tail_bound), num(s.sigma_m),
                            num(s.c_m), num(s.combo), num(s.sigma_error_bound)});
  }
  return r;
}

namespace {

template <class Value>
Real scaled_residual(const std::vector<BigRational>& coeffs, const Value& x) {
  Value v(0);
  Real scale(0);
  const Real ax = abs(x);
  for (size_t j = coeffs.size(); j-- > 0;) {
    v = v * x + Value(to_real(coeffs[j]));
    scale = scale * ax + abs(to_real(coeffs[j]));
  }
  return abs(v) / scale;
}

}  // namespace

CommandResult cmd_qpoly(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  if (c.m > (c.roots ? 60 : 400)) throw ConfigError("m too large for qpoly");
  const bool big = c.family == PolyFamily::Q;
  const BigRationalPoly p = big ? build_Q(c.m) : build_q(c.m);
  const std::string fam = big ? "Q" : "q";
  CommandResult r;
  r.table.header = {"family", "m", "kind", "j", "num", "den", "re", "im", "residual", "precision"};
  const std::string P = num(c.precision_digits);
  for (size_t j = 0; j < p.coeffs.size(); ++j) {
    const BigRational& q = p.coeffs[j];
    r.table.rows.push_back({fam, num(c.m), "coeff", num(static_cast<int>(j)),
                            numerator(q).str(), denominator(q).str(), num(to_real(q)), num(Real(0)),
                            "", P});
  }
  if (!c.roots) return r;
  if (big) {
    // s = 1/2 + i t on the critical line
    const CriticalLinePoly cl = critical_line_polynomial(p);
    const RootSet rs = critical_line_roots(c.m);
    for (size_t j = 0; j < rs.roots_t.size(); ++j) {
      const Real& t = rs.roots_t[j];
      r.table.rows.push_back({fam, num(c.m), "root", num(static_cast<int>(j)), "", "",
                              num(Real(1) / 2), num(t), num(scaled_residual(cl.coeffs, t)), P});
    }
    if (!rs.all_real_confirmed) {
      r.exit_code = kCheckFailure;
      r.message = "critical-line roots not all real";
    }
  } else {
    const SmallQRoots rs = small_q_roots(c.m);
    std::vector<Cx> roots = rs.roots.roots;
    std::sort(roots.begin(), roots.end(), [](const Cx& a, const Cx& b) {
      return a.im < b.im || (a.im == b.im && a.re < b.re);
    });
    for (size_t j = 0; j < roots.size(); ++j) {
      r.table.rows.push_back({fam, num(c.m), "root", num(static_cast<int>(j)), "", "",
                              num(roots[j].re), num(roots[j].im),
                              num(scaled_residual(p.coeffs, roots[j])), P});
    }
  }
  return r;
}

namespace {

struct CheckRow {
  std::string name;
  std::string detail;
  Real residual;
  Real tolerance;
};

std::string fmt_point(const Cx& s) {
  return s.im == 0 ? to_string(s.re, 6) : to_string(s.re, 6) + "," + to_string(s.im, 6);
}

std::vector<CheckRow> verify_suite(const Real& scale) {
  std::vector<CheckRow> rows;
  auto add = [&](std::string name, std::string detail, const Real& res, const Real& tolerance) {
    rows.push_back({std::move(name), std::move(detail), res, tolerance * scale});
  };
  auto floor_tol = [](const char* fixed) { return std::max<Real>(Real(fixed), tol(5)); };

  add("zeta_oracle", "s=2", abs(zeta_oracle(Cx(2)).re - pi() * pi() / 6), tol(10));

  for (const Cx& t : {Cx(Real("1.3")), Cx(Real("0.8"), Real("0.3")), Cx(Real("2.5"), Real("-1.9"))}) {
    const Cx inv = Cx(1) / t;
    add("jacobi_theta", "t=" + fmt_point(t),
        abs(theta(SectorPoint(inv)) * inv - theta(SectorPoint(t))), tol(5));
  }

  for (auto [m, t] : {std::pair{0, "1"}, std::pair{4, "0.7"}, std::pair{20, "1.6"}})
    add("psi_convolution", "m=" + std::to_string(m) + " t=" + t,
        lemma1_convolution_check(m, Real(t)), tol(10));

  for (const Cx& s : {Cx(Real("0.3")), Cx(Real("0.5"), Real(5)), Cx(Real("0.8"))}) {
    for (int m : {0, 3, 10})
      add("psi_mellin_closed_form", "m=" + std::to_string(m) + " s=" + fmt_point(s),
          lemma3_check(m, s), Real("1e-15"));
    add("theta_mellin_anchor", "s=" + fmt_point(s), theta_mellin_anchor(s), Real("1e-12"));
  }

  add("reciprocal_expansion", "t=2 M=100",
      abs(partial_sum(coeffs_one_over_one_plus_t(100), SectorPoint(Real(2))) - Cx(Real(1) / 3)),
      floor_tol("1e-30"));

  {
    const AlphaTable tab = alpha_table(20);
    const SectorPoint one(Real(1));
    Real tails(0);
    for (const AlphaEntry& e : tab.entries) tails += e.tail_bound;
    const Cx g1 = theta(one);
    add("theta_anchor_t1", "M=20", abs(theorem_partial_sum(one, tab) - (g1 - Cx(2))),
        tails + tol(5));
    add("lattice_anchor_t1", "M=20", abs(lemma2_partial_sum(one, tab) - Cx(tab.entries[0].S_4m)),
        tol(5));
  }

  for (auto [a, b] : {std::pair{0, 0}, std::pair{1, 2}, std::pair{2, 2}})
    add("parseval_orthogonality", "m1=" + std::to_string(a) + " m2=" + std::to_string(b),
        parseval_orthogonality_check(a, b), Real("1e-12"));

  for (int m = 0; m <= 5; ++m)
    add("lattice_two_route", "m=" + std::to_string(m), appendix_identity_check(m),
        floor_tol("1e-25"));
  {
    const TTable t = t_table(50);
    Real worst(0);
    for (const TEntry& e : t.entries)
      if (e.m % 4) worst = std::max<Real>(worst, abs(e.T) / e.tail_bound);
    add("lattice_vanishing", "m<=50 |T_m|/tail_bound", worst, Real(1));
  }

  add("laguerre_pointwise", "x=1.5 t=0.7 M=200", eq6_residual(Real("1.5"), Real("0.7"), 200),
      floor_tol("1e-30"));
  for (auto [a, b] : {std::pair{0, 0}, std::pair{2, 5}, std::pair{12, 12}})
    add("laguerre_orthogonality", "m=" + std::to_string(a) + " n=" + std::to_string(b),
        abs(laguerre_inner_product(a, b) - (a == b ? Real(1) / 2 : Real(0))), Real("1e-12"));
  add("bose_poisson", "t=1.7", expansion_g_check(Real("1.7"), 0).poisson_residual,
      Real("1e-20"));
  add("muntz_mellin", "s=0.5", muntz_check(Cx(Real("0.5"))), Real("1e-10"));
  return rows;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  const Real scale = parse_real(c.tolerance_scale, "tolerance-scale");
  if (scale < 0) throw ConfigError("tolerance-scale must be nonnegative");
  CommandResult r;
  r.table.header = {"check", "detail", "residual", "tolerance", "status", "precision"};
  for (const CheckRow& row : verify_suite(scale)) {
    const bool ok = row.residual <= row.tolerance;
    r.table.rows.push_back({row.name, row.detail, num(row.residual), num(row.tolerance),
                            ok ? "pass" : "fail", num(c.precision_digits)});
    if (!ok && r.exit_code == kOk) {
      r.exit_code = kCheckFailure;
      r.message = "check failed: " + row.name + " (" + row.detail + ")";
    }
  }
  return r;
}

CommandResult cmd_conjecture(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  const int M = max_m_or(c, 64, 1, 1024);
  std::vector<Cx> grid = strip_grid(c);
  std::sort(grid.begin(), grid.end(), [](const Cx& a, const Cx& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  std::optional<Real> r_abel;
  if (!c.abel.empty()) {
    r_abel = parse_real(c.abel, "abel");
    if (!(*r_abel > 0 && *r_abel <= 1)) throw ConfigError("abel must lie in (0, 1]");
  }
  const std::vector<int> orders = doubling_orders(M);

  CommandResult r;
  r.table.header = {"series",     "re_s",   "im_s",   "M",       "re_partial",
                    "im_partial", "re_ref", "im_ref", "residual"};
  if (r_abel) {
    for (const char* h : {"abel_r", "re_abel", "im_abel", "abel_residual"})
      r.table.header.push_back(h);
  }
  r.table.header.push_back("precision");
  const std::string P = num(c.precision_digits);

  // prefactor * sum_{m<=M} terms[m], Abel weight r^(power*m), one row per order
  auto curve = [&](const std::string& series, const Cx& s, const Cx& ref, const Cx& prefactor,
                   const std::vector<Cx>& terms, int power) {
    CompensatedSum<Cx> sum, damped;
    const Real step = r_abel ? pow(*r_abel, power) : Real(1);
    Real w(1);
    size_t next = 0;
    for (int m = 0; m <= M; ++m) {
      sum.add(terms[m]);
      damped.add(terms[m] * w);
      w *= step;
      if (next == orders.size() || orders[next] != m) continue;
      ++next;
      const Cx partial = prefactor * sum.value();
      std::vector<std::string> row = {series,         num(s.re),      num(s.im),
                                      num(m),         num(partial.re), num(partial.im),
                                      num(ref.re),    num(ref.im),    num(abs(partial - ref))};
      if (r_abel) {
        const Cx a = prefactor * damped.value();
        row.insert(row.end(), {num(*r_abel), num(a.re), num(a.im), num(abs(a - ref))});
      }
      row.push_back(P);
      r.table.rows.push_back(std::move(row));
    }
  };

  const AlphaTable alpha = alpha_table(M);
  const SigmaTable sigma = coeff_tables(M);
  const std::vector<BigRational> pos = pi_over_sin_coefficients(M);
  for (const Cx& s : grid) {
    const Cx zeta = zeta_oracle(s);
    const std::vector<Cx> Q = Q_values(2 * M, s);
    const std::vector<Cx> q = q_values(M, s / 2);
    std::vector<Cx> theta_terms(M + 1), laguerre_terms(M + 1), pos_terms(M + 1);
    for (int m = 0; m <= M; ++m) {
      theta_terms[m] = Q[2 * m] * alpha.entries[m].alpha_2m;
      laguerre_terms[m] = q[m] * sigma.entries[m].combo;
      pos_terms[m] = Q[2 * m] * to_real(pos[m]);
    }
    // theta side: (1/sqrt(2 pi)) pi^(s/2) Gamma((1-s)/2) sum alpha_2m Q_2m(s)
    curve("theta", s, zeta, conjecture_prefactor(s), theta_terms, 2);
    // Laguerre side, formal: sum (sigma_m - pi c_m) q_m(s/2)
    curve("laguerre", s, zeta, Cx(1), laguerre_terms, 1);
    // pi/sin(pi s) = (1/2) Gamma(s/2) Gamma((1-s)/2)/sqrt(2 pi) sum c_m Q_2m(s)
    curve("pi_over_sin", s, Cx(pi()) / sin(s * pi()), psi_mellin_factor(s) / 2, pos_terms, 2);
  }
  return r;
}

CommandResult cmd_laguerre(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  const int M = max_m_or(c, 256, 8, 4096);
  const SigmaTable t = coeff_tables(M + 4);
  const AmplitudeReport amp = amplitude_law(t, 4, M);
  CommandResult r;
  r.table.header = {"m",   "s_m",    "s_tail_bound",    "sigma_m",  "sigma_error_bound",
                    "c_m", "sigma_minus_pi_c", "envelope", "amplitude", "ratio", "precision"};
  const std::string P = num(c.precision_digits);
  for (int m = 0; m <= M; ++m) {
    const SigmaEntry& e = t.entries[m];
    std::string env, ampl, ratio;
    if (m >= 4) {
      const AmplitudeRow& a = amp.rows[m - 4];
      env = num(a.envelope);
      ampl = num(sqrt(pi() / (2 * m)));
      ratio = num(a.ratio);
    }
    r.table.rows.push_back({num(m), num(e.s_m), num(e.s_tail_bound), num(e.sigma_m),
                            num(e.sigma_error_bound), num(e.c_m), num(e.combo), env, ampl, ratio,
                            P});
  }
  return r;
}

CommandResult cmd_appendix(const RunConfig& c) {
  validate(c);
  Precision scope(c.precision_digits);
  const int M = max_m_or(c, 50, 0, 200);
  const TTable t = t_table(M);
  CommandResult r;
  r.table.header = {"m",        "radius",   "T_re",   "T_im",
                    "tail_bound", "expected", "status", "two_route_residual", "precision"};
  for (const TEntry& e : t.entries) {
    const bool zero = e.m % 4 != 0;
    const bool ok = zero ? abs(e.T) <= e.tail_bound : abs(e.T) > e.tail_bound;
    std::string two_route;
    if (!zero && e.m <= 20) two_route = num(appendix_identity_check(e.m / 4));
    r.table.rows.push_back({num(e.m), num(e.radius), num(e.T.re), num(e.T.im), num(e.tail_bound),
                            zero ? "zero" : "nonzero", ok ? "pass" : "fail", two_route,
                            num(c.precision_digits)});
    if (!ok && r.exit_code == kOk) {
      r.exit_code = kCheckFailure;
      r.message = "check failed: T_" + std::to_string(e.m) + " against its tail bound";
    }
  }
  return r;
}

CommandResult execute(const RunConfig& c) {
  static const std::map<std::string, std::function<CommandResult(const RunConfig&)>> table = {
      {"coeffs", cmd_coeffs},     {"qpoly", cmd_qpoly},       {"verify", cmd_verify},
      {"conjecture", cmd_conjecture}, {"laguerre", cmd_laguerre}, {"appendix", cmd_appendix}};
  CommandResult fail;
  try {
    validate(c);
    return table.at(c.command)(c);
  } catch (const ConfigError& e) {
    fail.exit_code = kConfigError;
    fail.message = std::string("config error: ") + e.what();
  } catch (const DomainError& e) {
    fail.exit_code = kConfigError;
    fail.message = std::string("config error: ") + e.what();
  } catch (const ConvergenceError& e) {
    fail.exit_code = kConvergenceFailure;
    std::ostringstream msg;
    msg << "convergence failure: " << e.what() << " (m=" << e.index()
        << ", log10 tolerance=" << e.log10_tolerance() << ")";
    fail.message = msg.str();
  } catch (const RootFindingError& e) {
    fail.exit_code = kConvergenceFailure;
    fail.message = std::string("convergence failure: ") + e.what();
  } catch (const LabError& e) {
    fail.exit_code = kCheckFailure;
    fail.message = std::string("check failed: ") + e.what();
  }
  return fail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"High-precision theta, Hermite and zeta expansion laboratory"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  RunConfig c;
  std::string format = "csv";
  std::string family = "Q";
  app.add_option("--precision", c.precision_digits, "Decimal digits P (>= 30)");
  app.add_option("--max-m", c.max_m, "Largest expansion index");
  app.add_option("--grid", c.grid, "Points \"re,im;re,im;...\"");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.output_path, "Output file (default stdout)");
  app.add_option("--abel", c.abel, "Abel damping radius r in (0, 1]");
  app.add_option("--family", family, "Q or q")->check(CLI::IsMember({"Q", "q"}));
  app.add_option("--m", c.m, "Polynomial index");
  app.add_flag("--roots", c.roots, "Also emit roots with residuals");
  app.add_option("--tolerance-scale", c.tolerance_scale, "Scale verify tolerances")
      ->group("");

  for (const char* name : {"coeffs", "qpoly", "verify", "conjecture", "laguerre", "appendix"}) {
    app.add_subcommand(name, "")->fallthrough();
  }
  app.get_subcommand("coeffs")->description("Alpha, S, T and sigma coefficient tables");
  app.get_subcommand("qpoly")->description("Exact polynomial coefficients and roots");
  app.get_subcommand("verify")->description("Identity suite with residuals");
  app.get_subcommand("conjecture")->description("Residual curves of both zeta expansions");
  app.get_subcommand("laguerre")->description("Sigma table and amplitude ratios");
  app.get_subcommand("appendix")->description("Two-dimensional lattice sums T_m");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.output_format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  c.family = family == "q" ? PolyFamily::q : PolyFamily::Q;

  const CommandResult r = execute(c);
  if (!r.message.empty()) err << r.message << "\n";
  if (r.exit_code == kConfigError || r.exit_code == kConvergenceFailure) return r.exit_code;
  const std::string text = render(r.table, c.output_format);
  if (c.output_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.output_path, std::ios::binary);
    if (!f) {
      err << "config error: cannot open " << c.output_path << "\n";
      return kConfigError;
    }
    f << text;
  }
  return r.exit_code;
}

}  // namespace zetalab::cli
