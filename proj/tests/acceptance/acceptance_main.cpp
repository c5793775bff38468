// Acceptance suite: runs every shipped-contract criterion end to end and
// prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.
//
// Criteria 5, 6 and 9 are implemented exactly as stated even though the
// exact computations show the stated expectations cannot all hold (the
// suite prints the verified corrected statements alongside); see the test
// output and README for the details.
//
// Usage: acceptance_tests [path-to-twistlap-cli]

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "twistlap/errors.hpp"
#include "twistlap/jacobi.hpp"
#include "twistlap/limits.hpp"
#include "twistlap/operators.hpp"
#include "twistlap/probes.hpp"
#include "twistlap/spectral.hpp"

namespace tl = twistlap;
using tl::Rational;

namespace {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::vector<tl::SurfaceMagneticParams> negative_sets() {
  std::vector<tl::SurfaceMagneticParams> out;
  for (long two_kappa : {-4L, -2L, -1L}) {
    const Rational kappa(two_kappa, 2);
    for (const Rational& nu : {Rational(2), Rational(3), Rational(9, 2)})
      out.push_back(tl::SurfaceMagneticParams::create(kappa, nu));
  }
  return out;
}

std::vector<tl::SurfaceMagneticParams> positive_sets() {
  std::vector<tl::SurfaceMagneticParams> out;
  for (const Rational& kappa : {Rational(1, 2), Rational(1), Rational(2)})
    for (long flux : {1L, 2L, 4L})
      out.push_back(tl::SurfaceMagneticParams::create(kappa, kappa * Rational(flux) / Rational(2)));
  return out;
}

std::string param_tag(const tl::SurfaceMagneticParams& p) {
  return "kappa=" + p.kappa.to_string() + ",nu=" + p.nu.to_string();
}

long grid_mmax(const tl::SurfaceMagneticParams& p) {
  const auto check = tl::validate_params(p.kappa, p.nu);
  return check.max_m ? std::min(6L, *check.max_m) : 6L;
}

// ---------------------------------------------------------------------------

CriterionResult criterion_1_route_agreement() {
  CriterionResult r{1, "route agreement on the full grid", true, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  long cells = 0;
  for (const auto& sets : {negative_sets(), positive_sets()}) {
    for (const auto& p : sets) {
      const auto cc = tl::route_crosscheck(p, grid_mmax(p), 8);
      cells += static_cast<long>(cc.entries.size());
      if (!cc.all_routes_equal) {
        r.pass = false;
        r.detail = "route disagreement at " + param_tag(p);
        return r;
      }
      if (!cc.jacobi_ratio_one_for_m_le_n) {
        r.pass = false;
        r.detail = "jacobi ratio differs from 1 on m <= n at " + param_tag(p);
        return r;
      }
      for (const auto& e : cc.entries)
        if (e.jacobi_ratio.is_zero()) {
          r.pass = false;
          r.detail = "jacobi route not proportional at " + param_tag(p);
          return r;
        }
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::ostringstream detail;
  detail << "18 parameter sets, " << cells << " grid cells, three routes exactly equal, "
         << "jacobi ratio 1 for m <= n; " << elapsed.count() << " ms (< 60 s)";
  r.pass = elapsed.count() < 60000;
  r.detail = detail.str();
  return r;
}

CriterionResult criterion_2_eigen_identity() {
  CriterionResult r{2, "exact eigen-identity on the grid", true, {}, {}};
  long checked = 0;
  for (const auto& sets : {negative_sets(), positive_sets()}) {
    for (const auto& p : sets) {
      const long mmax = grid_mmax(p);
      for (long m = 0; m <= mmax; ++m) {
        const auto spec = tl::level_spec(p, m);
        const long nmax = spec.n_max ? std::min(8L, *spec.n_max) : 8L;
        for (long n = 0; n <= nmax; ++n) {
          ++checked;
          if (!tl::verify_eigen(p, m, n)) {
            r.pass = false;
            r.detail = "eigen identity fails at " + param_tag(p) + " (m=" + std::to_string(m) +
                       ", n=" + std::to_string(n) + ")";
            return r;
          }
        }
      }
    }
  }
  for (const Rational& nu : {Rational(2), Rational(3), Rational(9, 2)}) {
    const auto p = tl::SurfaceMagneticParams::create(Rational(0), nu);
    for (long m = 0; m <= 6; ++m)
      for (long n = 0; n <= 8; ++n) {
        ++checked;
        if (!tl::verify_eigen(p, m, n)) {
          r.pass = false;
          r.detail = "flat eigen identity fails at nu=" + nu.to_string();
          return r;
        }
      }
  }
  r.detail = std::to_string(checked) + " eigenpairs, zero tolerance (symbolic equality)";
  return r;
}

CriterionResult criterion_3_operator_identities() {
  CriterionResult r{3, "operator identities on seeded probes", true, {}, {}};
  std::vector<tl::SurfaceMagneticParams> sets = negative_sets();
  const auto pos = positive_sets();
  sets.insert(sets.end(), pos.begin(), pos.end());
  sets.push_back(tl::SurfaceMagneticParams::create(Rational(0), Rational(1)));
  sets.push_back(tl::SurfaceMagneticParams::create(Rational(0), Rational(9, 2)));

  long suites = 0;
  for (const auto& p : sets) {
    tl::ProbeGen gen(20240811);
    const auto probes = gen.probe_set(p.kappa, 100);
    const auto fact = tl::verify_factorization(p, probes);
    const auto inter = tl::verify_intertwining(p, probes);
    suites += 2;
    if (!fact.all_passed || !inter.all_passed) {
      r.pass = false;
      r.detail = "factorization/intertwining failed at " + param_tag(p);
      return r;
    }
  }
  for (const auto& p : {tl::SurfaceMagneticParams::create(Rational(-1), Rational(3)),
                        tl::SurfaceMagneticParams::create(Rational(-1, 2), Rational(9, 2)),
                        tl::SurfaceMagneticParams::create(Rational(1, 2), Rational(1)),
                        tl::SurfaceMagneticParams::create(Rational(2), Rational(4))}) {
    tl::ProbeGen gen(424243);
    const auto probes = gen.probe_set(p.kappa, 100);
    for (long m = 0; m <= 6; ++m) {
      ++suites;
      if (!tl::verify_d_power_reduction(m, p.kappa, probes).all_passed) {
        r.pass = false;
        r.detail = "D-power identity failed at " + param_tag(p) + ", m=" + std::to_string(m);
        return r;
      }
    }
  }
  r.detail = std::to_string(suites) + " identity suites, 100 probes each, exact equality";
  return r;
}

CriterionResult criterion_4_orthogonality() {
  CriterionResult r{4, "orthogonality and the pi/5 ground norm", true, {}, {}};
  const auto p = tl::SurfaceMagneticParams::create(Rational(-1), Rational(3));
  std::vector<std::pair<long, long>> entries;
  for (long m = 0; m <= 2; ++m)
    for (long n = 0; n <= 4; ++n) entries.emplace_back(m, n);
  const auto gram = tl::gram_matrix(p, entries);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j) {
      const auto& cell = gram[i][j];
      if (i == j) {
        if (!cell.is_finite() || cell.value().q.sign() <= 0) {
          r.pass = false;
          r.detail = "diagonal entry not a positive pi-rational";
          return r;
        }
      } else if (!cell.is_finite() || !cell.value().is_zero()) {
        r.pass = false;
        r.detail = "off-diagonal entry not exactly zero";
        return r;
      }
    }
  if (!(gram[0][0] == tl::MomentResult::finite(Rational(1, 5)))) {
    r.pass = false;
    r.detail = "<Phi00, Phi00> != pi/5";
    return r;
  }
  r.detail = "15x15 Gram matrix exactly diagonal, positive; <Phi00,Phi00> = pi/5";
  return r;
}

CriterionResult criterion_5_disc_boundary() {
  CriterionResult r{5, "L2 boundary at kappa=-1, nu=3 (divergent beyond m=2)", true, {}, {}};
  const auto p = tl::SurfaceMagneticParams::create(Rational(-1), Rational(3));
  for (long m = 0; m <= 2; ++m)
    for (long n = 0; n <= 5; ++n) {
      const auto norm = tl::norm_squared(p, tl::eigenfunction(p, m, n));
      if (!norm.is_finite() || norm.value().q.sign() <= 0) {
        r.pass = false;
        r.detail = "in-range norm not finite-positive at m=" + std::to_string(m);
        return r;
      }
    }
  std::string observed;
  for (long n = 0; n <= 5; ++n) {
    const auto phi = tl::eigenfunction(p, 3, n, tl::Bounds::formal);
    const auto norm = tl::norm_squared(p, phi);
    if (!observed.empty()) observed += ", ";
    observed += "n=" + std::to_string(n) + ": " + norm.to_string();
    if (!norm.is_divergent()) r.pass = false;
  }
  if (r.pass) {
    r.detail = "norms finite for m <= 2 and divergent at m = 3 for n <= 5";
    return r;
  }
  r.detail = "m=3 norms are not divergent as stated; observed " + observed;
  r.notes.push_back(
      "at these parameters nu + 3 kappa = 0, so the m=3 chain collapses: "
      "Phi_{3,0} = 0 and Phi_{3,n} = -n Phi_{2,n-1} (verified exactly), all square-integrable");
  // the membership boundary the bound describes, verified exactly on the seeds
  const Rational t = p.nu_over_kappa();
  bool seeds_ok = true;
  for (long m = 0; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n) {
      const auto seed = tl::WeightedFn::power(p.kappa, -(t + Rational(m)),
                                              tl::BiPoly::monomial(n, 0, Rational(1)));
      const bool finite = tl::norm_squared(p, seed).is_finite();
      if (finite != (m <= 2)) seeds_ok = false;
    }
  r.notes.push_back(std::string("level-generator norms ||(1+kappa|z|^2)^{-(nu/kappa+m)} z^n|| ") +
                    (seeds_ok ? "match the bound (2nu+kappa)/(-2kappa) = 5/2 exactly "
                                "(finite iff m <= 2, all n <= 5): verified"
                              : "FAILED to match the bound"));
  return r;
}

CriterionResult criterion_6_sphere_dimension() {
  CriterionResult r{6, "sphere level dimensions at kappa=1, nu=1", true, {}, {}};
  const auto p = tl::SurfaceMagneticParams::create(Rational(1), Rational(1));
  std::string observed;
  for (long m = 0; m <= 4; ++m) {
    long finite = 0;
    for (long n = 0; n <= m + 3; ++n) {
      const auto norm = tl::norm_squared(p, tl::eigenfunction(p, m, n, tl::Bounds::formal));
      if (norm.is_finite()) ++finite;
    }
    const auto edge = tl::norm_squared(p, tl::eigenfunction(p, m, m + 3, tl::Bounds::formal));
    const bool level_ok = (finite == 2 + m + 1) && edge.is_divergent();
    if (!level_ok) r.pass = false;
    if (!observed.empty()) observed += "; ";
    observed += "m=" + std::to_string(m) + ": " + std::to_string(finite) +
                " finite of n<=" + std::to_string(m + 3) + ", n=" + std::to_string(m + 3) + " " +
                edge.to_string();
  }
  if (r.pass) {
    r.detail = "each level m <= 4 has 2+m+1 finite-norm members and n = m+3 divergent";
    return r;
  }
  r.detail = "stated count 2+m+1 with n=m+3 divergent does not hold; observed " + observed;
  r.notes.push_back(
      "at n = 2nu/kappa + m + 1 the leading coefficient carries the factor (1-m)_m = 0, the "
      "degree drops, and the member stays square-integrable for m >= 1");
  bool law_ok = true;
  for (long m = 0; m <= 4; ++m) {
    long finite = 0;
    for (long n = 0; n <= 2 + 2 * m + 1; ++n)
      if (tl::norm_squared(p, tl::eigenfunction(p, m, n, tl::Bounds::formal)).is_finite())
        ++finite;
    if (finite != 2 + 2 * m + 1) law_ok = false;
    if (!tl::norm_squared(p, tl::eigenfunction(p, m, 2 + 2 * m + 1, tl::Bounds::formal))
             .is_divergent())
      law_ok = false;
  }
  r.notes.push_back(std::string("corrected dimension law (finite exactly for n <= 2nu/kappa + 2m, "
                                "i.e. 2nu/kappa + 2m + 1 members per level): ") +
                    (law_ok ? "verified for m <= 4" : "FAILED"));
  return r;
}

CriterionResult criterion_7_hermite_limit() {
  CriterionResult r{7, "flat-limit convergence to the complex Hermite family", true, {}, {}};
  const Rational nu(1);
  const auto seq = tl::default_kappa_sequence(4, 12, -1);
  for (long m = 0; m <= 3; ++m)
    for (long n = 0; n <= 3; ++n) {
      const auto rep = tl::hermite_limit_probe(nu, m, n, seq);
      if (!rep.extrapolated_match) {
        r.pass = false;
        r.detail = "no convergence match at (m,n)=(" + std::to_string(m) + "," +
                   std::to_string(n) + ")";
        return r;
      }
      if (!(std::isinf(rep.fitted_order) || rep.fitted_order >= 0.9)) {
        r.pass = false;
        r.detail = "fitted order below 0.9 at (m,n)=(" + std::to_string(m) + "," +
                   std::to_string(n) + ")";
        return r;
      }
    }
  const auto rep11 = tl::hermite_limit_probe(nu, 1, 1, seq);
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!(rep11.points[i].exact_diff == seq[i].abs())) {
      r.pass = false;
      r.detail = "(1,1) difference differs from |kappa| at step " + std::to_string(i);
      return r;
    }
  r.detail =
      "m,n <= 3: monotone decrease, order >= 0.9, extrapolated difference <= 1e-8 scale "
      "(exact extrapolation gives 0); (1,1) difference equals |kappa| at every step";
  return r;
}

CriterionResult criterion_8_jacobi_claims() {
  CriterionResult r{8, "jacobi contiguous/derivative claims and the corrected equation", true, {}, {}};
  const std::vector<Rational> set{Rational(-7, 2), Rational(-2), Rational(-1, 2),
                                  Rational(0),     Rational(1),  Rational(5, 2)};
  for (const Rational& a : set)
    for (const Rational& b : set) {
      for (long j = 0; j <= 10; ++j) {
        if (!tl::jacobi_contiguous_check(j, a, b)) {
          r.pass = false;
          r.detail = "contiguous relation fails at (a,b)=(" + a.to_string() + "," + b.to_string() +
                     "), j=" + std::to_string(j);
          return r;
        }
        if (!tl::jacobi_derivative_check(j, a, b)) {
          r.pass = false;
          r.detail = "derivative rule fails at (a,b)=(" + a.to_string() + "," + b.to_string() + ")";
          return r;
        }
      }
      for (long l = 0; l <= 8; ++l)
        if (!tl::jacobi_ode_residuals(l, a, b).corrected.is_zero()) {
          r.pass = false;
          r.detail = "corrected equation residual nonzero at degree " + std::to_string(l);
          return r;
        }
    }
  r.detail = "j <= 10 and l <= 8 over the 36 rational parameter pairs, exact";
  return r;
}

CriterionResult criterion_9_annihilation() {
  CriterionResult r{9, "adjoint annihilation of the level generators (as stated)", true, {}, {}};
  bool literal_ok = true;
  bool shifted_ok = true;
  bool residual_ok = true;
  std::string first_counterexample;
  for (const auto& sets : {negative_sets(), positive_sets()}) {
    for (const auto& p : sets) {
      const long mmax = grid_mmax(p);
      for (long m = 0; m <= mmax; ++m) {
        const Rational b = p.nu + Rational(m) * p.kappa;
        for (int n = 0; n <= 10; ++n) {
          const auto gen = tl::WeightedFn::power(p.kappa, -b / p.kappa,
                                                 tl::BiPoly::monomial(n, 0, Rational(1)));
          const auto literal = tl::nabla_star(b, gen, p.kappa);
          if (!literal.is_zero()) {
            literal_ok = false;
            if (first_counterexample.empty())
              first_counterexample = param_tag(p) + ", m=" + std::to_string(m) +
                                     ", n=" + std::to_string(n);
            if (!literal.equals(gen.times(tl::BiPoly::monomial(1, 0, -p.kappa))))
              residual_ok = false;
          }
          if (!tl::nabla_star(b + p.kappa, gen, p.kappa).is_zero()) shifted_ok = false;
        }
      }
    }
  }
  // flat family: the stated subscript does annihilate
  const Rational nu(1);
  for (int n = 0; n <= 10; ++n) {
    const auto gen = tl::WeightedFn::exponential(-nu, tl::BiPoly::monomial(n, 0, Rational(1)));
    if (!tl::nabla_star(nu, gen, Rational(0)).is_zero()) literal_ok = false;
  }
  if (literal_ok) {
    r.detail = "nabla*_b annihilates (1+kappa|z|^2)^{-b/kappa} z^n for n <= 10 on all grids";
    return r;
  }
  r.pass = false;
  r.detail = "nabla*_b does not annihilate (1+kappa|z|^2)^{-b/kappa} z^n for kappa != 0 "
             "(first counterexample: " + first_counterexample + ")";
  r.notes.push_back(std::string("the leftover is exactly -kappa z^{n+1} times the generator: ") +
                    (residual_ok ? "verified on every grid point" : "NOT confirmed"));
  r.notes.push_back(std::string("one ladder step up, nabla*_{b+kappa} annihilates the same "
                                "generators exactly (n <= 10, all grids): ") +
                    (shifted_ok ? "verified" : "FAILED"));
  r.notes.push_back("the same-index statement is consistent only at kappa = 0, where it holds");
  return r;
}

// --- criterion 10 helpers ---

std::string run_cli(const std::string& cli, const std::string& args, int& exit_code) {
  const std::string cmd = cli + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

std::complex<double> eval_oracle(const tl::WeightedFn& f, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (const auto& [mono, c] : f.poly().terms())
    acc += c.to_double() * std::pow(z, mono.z) * std::pow(std::conj(z), mono.zbar);
  const double r2 = std::norm(z);
  if (f.is_power())
    return acc * std::pow(1.0 + f.power_weight().kappa.to_double() * r2,
                          f.power_weight().s.to_double());
  return acc * std::exp(f.exp_weight().c.to_double() * r2);
}

CriterionResult criterion_10_numeric_consistency(const std::string& cli) {
  CriterionResult r{10, "float evaluation vs oracle; byte-reproducible CLI", true, {}, {}};
  std::vector<tl::SurfaceMagneticParams> sets = negative_sets();
  const auto pos = positive_sets();
  sets.insert(sets.end(), pos.begin(), pos.end());
  sets.push_back(tl::SurfaceMagneticParams::create(Rational(0), Rational(1)));

  tl::ProbeGen gen(987654321);
  for (const auto& p : sets) {
    const long m = p.kappa.is_zero() ? 2 : std::min(grid_mmax(p), 2L);
    const long n = 2;
    const auto phi = tl::eigenfunction(p, m, n);
    const double radius =
        p.kappa.sign() < 0 ? 0.95 / std::sqrt(-p.kappa.to_double()) : 1.5;
    for (int i = 0; i < 100; ++i) {
      const double x = static_cast<double>(gen.next_long(-1000, 1000)) / 1000.0;
      const double y = static_cast<double>(gen.next_long(-1000, 1000)) / 1000.0;
      const std::complex<double> z(x * radius * 0.7, y * radius * 0.7);
      const auto fast = phi.eval(z);
      const auto slow = eval_oracle(phi, z);
      if (std::abs(fast - slow) > 1e-10 * (1.0 + std::abs(slow))) {
        r.pass = false;
        r.detail = "evaluation mismatch at " + param_tag(p);
        return r;
      }
    }
  }

  if (cli.empty() || !std::filesystem::exists(cli)) {
    r.pass = false;
    r.detail = "CLI binary not found for the reproducibility check (" + cli + ")";
    return r;
  }
  const std::vector<std::string> commands{
      "poly --kappa -1 --nu 3 -m 2 -n 3 --format json",
      "verify --kappa -1/2 --nu 2 --seed 777 --format json",
      "verify --kappa 0 --nu 1 --seed 31 --format json",
      "spectrum --kappa 1 --nu 1 --mmax 4 --format csv",
      "gram --kappa -1 --nu 3 --entries \"0,0;0,1;1,1;2,2\" --format json",
      "eval --kappa -1 --nu 3 -m 1 -n 1 --nx 7 --ny 7 --format csv",
      "limit --nu 1 --mmax 2 --nmax 2 --format json",
  };
  for (const auto& args : commands) {
    int code1 = 0, code2 = 0;
    const std::string out1 = run_cli(cli, args, code1);
    const std::string out2 = run_cli(cli, args, code2);
    if (code1 != 0 || code2 != 0) {
      r.pass = false;
      r.detail = "CLI exited nonzero for: " + args;
      return r;
    }
    if (out1 != out2 || out1.empty()) {
      r.pass = false;
      r.detail = "CLI output not byte-identical for: " + args;
      return r;
    }
  }
  r.detail = "2800 seeded points within 1e-10 relative; 7 CLI commands byte-identical across runs";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  if (argc > 1) {
    cli = argv[1];
  } else {
    // default: ../tools/twistlap next to this binary
    char buf[4096];
    const ssize_t len = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
    if (len > 0) {
      buf[len] = '\0';
      cli = (std::filesystem::path(buf).parent_path().parent_path() / "tools" / "twistlap")
                .string();
    }
  }

  std::vector<CriterionResult> results;
  results.push_back(criterion_1_route_agreement());
  results.push_back(criterion_2_eigen_identity());
  results.push_back(criterion_3_operator_identities());
  results.push_back(criterion_4_orthogonality());
  results.push_back(criterion_5_disc_boundary());
  results.push_back(criterion_6_sphere_dimension());
  results.push_back(criterion_7_hermite_limit());
  results.push_back(criterion_8_jacobi_claims());
  results.push_back(criterion_9_annihilation());
  results.push_back(criterion_10_numeric_consistency(cli));

  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name
              << " -- " << r.detail << "\n";
    for (const auto& note : r.notes) std::cout << "         note: " << note << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criterion(s) failed as stated; see notes")
            << "\n";
  return failed;
}
