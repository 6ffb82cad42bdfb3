// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isogenix/algorithms.hpp"
#include "isogenix/bench.hpp"
#include "isogenix/curve.hpp"
#include "isogenix/generator.hpp"
#include "isogenix/series.hpp"

using namespace isogenix;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string fmt(double x, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

mpz_class residue(std::mt19937_64& rng, const FieldContext& F) {
  mpz_class v(static_cast<unsigned long>(rng()));
  v <<= 64;
  v += static_cast<unsigned long>(rng());
  return F.reduce(v);
}

Coeffs residues(std::mt19937_64& rng, const FieldContext& F, std::size_t n) {
  Coeffs c(n);
  for (auto& x : c) x = residue(rng, F);
  return c;
}

Curve random_curve(std::mt19937_64& rng, const FieldRef& F) {
  for (;;) {
    FieldElement A(F, residue(rng, *F)), B(F, residue(rng, *F));
    if (is_nonsingular(A, B)) return Curve(A, B);
  }
}

Isogeny run(AlgorithmId a, const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& s,
            const AlgorithmOptions& o = {}) {
  switch (a) {
    case AlgorithmId::Elkies1992:
      return elkies1992(E, Et, ell, s, o);
    case AlgorithmId::Elkies1998:
      return elkies1998(E, Et, ell, s, o);
    case AlgorithmId::FastElkies:
      return fast_elkies(E, Et, ell, s, o);
    case AlgorithmId::FastElkiesPrime:
      return fast_elkies_prime(E, Et, ell, o);
    case AlgorithmId::Stark1972:
      return stark1972(E, Et, ell, o);
    case AlgorithmId::Atkin1992:
      return atkin1992(E, Et, ell, s, o);
    case AlgorithmId::AtkinModComp:
      return atkin_modcomp(E, Et, ell, s, o);
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

bool prefix_is(const Coeffs& c, std::initializer_list<long> want) {
  if (c.size() < want.size()) return false;
  std::size_t i = 0;
  for (long w : want) {
    if (c[i++] != w) return false;
  }
  return true;
}

// -- 1 ----------------------------------------------------------------------

Outcome criterion1() {
  Outcome out;
  const auto t0 = Clock::now();
  auto F = make_field(mpz_class(101));
  const Curve E = Curve::from_longs(F, 1, 1), Et = Curve::from_longs(F, 75, 16);
  const FieldElement sigma(F, 50L);
  const Polynomial g = Polynomial::from_longs(F, {5, 97, 24, 89, 76, 1});
  const Polynomial N = Polynomial::from_longs(F, {15, 24, 5, 15, 43, 81, 39, 71, 44, 61, 51, 1});

  IsogenyWorkspace ws;
  AlgorithmOptions o;
  o.workspace = &ws;
  o.mode = KernelMode::Full;
  fast_elkies(E, Et, 11, sigma, o);
  if (!prefix_is(ws.S->raw(), {0, 1, 0, 0, 0, 68, 0, 66, 0, 60, 0, 84})) out.fail("S mismatch");
  if (!prefix_is(ws.U->raw(), {1, 0, 66, 70, 16, 96})) out.fail("U mismatch");
  if (!ws.h || ws.h->at(1) != FieldElement(F, 66L) || ws.h->at(2) != FieldElement(F, 70L) ||
      ws.h->at(3) != FieldElement(F, 16L) || ws.h->at(4) != FieldElement(F, 96L)) {
    out.fail("h_1..h_4 mismatch");
  }
  o.mode = KernelMode::Auto;
  fast_elkies(E, Et, 11, sigma, o);
  const long q[] = {43, 91, 86, 63};
  for (int i = 0; i < 4; ++i) {
    if (ws.psums.size() < 6 || ws.psums[i + 2] != FieldElement(F, q[i])) out.fail("q_2..q_5 mismatch");
  }

  for (AlgorithmId a : all_algorithms()) {
    try {
      Isogeny I = run(a, E, Et, 11, sigma);
      const std::string name = algorithm_name(a);
      if (!I.g || *I.g != g) out.fail(name + ": g mismatch");
      if (I.D != g * g) out.fail(name + ": D mismatch");
      if (I.N != N) out.fail(name + ": N mismatch");
      if (I.sigma != sigma) out.fail(name + ": sigma mismatch");
      if (!isogeny_verify(I).ok()) out.fail(name + ": verification failed");
    } catch (const std::exception& e) {
      out.fail(std::string(algorithm_name(a)) + ": " + e.what());
    }
  }
  const double ms = millis_since(t0);
  if (ms >= 1000) out.fail("took " + fmt(ms) + " ms");
  if (out.ok) out.detail = "S, U, h, q, g, N exact for all 7 algorithms in " + fmt(ms) + " ms";
  return out;
}

// -- 2 ----------------------------------------------------------------------

Outcome criterion2() {
  Outcome out;
  const auto t0 = Clock::now();
  auto F = make_field(mpz_class(1009));
  const Curve E = Curve::from_longs(F, 1, 3), Et = Curve::from_longs(F, 830, 82);
  const FieldElement sigma(F, 739L);
  const Polynomial D = Polynomial::from_longs(F, {399, 533, 659, 289, 270, 1});
  const Polynomial N = Polynomial::from_longs(F, {203, 555, 382, 566, 325, 270, 1});
  const std::vector<FieldElement> roots{FieldElement(F, 66L), FieldElement(F, 23L), FieldElement(F, 23L),
                                        FieldElement(F, 818L), FieldElement(F, 818L)};
  if (poly_from_roots(F, roots) != D) out.fail("D does not factor as (x-66)(x-23)^2(x-818)^2");

  for (AlgorithmId a : all_algorithms()) {
    try {
      Isogeny I = run(a, E, Et, 6, sigma);
      const std::string name = algorithm_name(a);
      if (I.D != D) out.fail(name + ": D mismatch");
      if (I.N != N) out.fail(name + ": N mismatch");
      if (!isogeny_verify(I).ok()) out.fail(name + ": verification failed");
    } catch (const std::exception& e) {
      out.fail(std::string(algorithm_name(a)) + ": " + e.what());
    }
  }

  try {
    auto pts = kernel_points_from_xs(E, {FieldElement(F, 66L), FieldElement(F, 333L), FieldElement(F, 610L)});
    auto [Et2, I2] = velu_from_kernel(E, pts);
    if (I2.D != Polynomial::from_longs(F, {3, 1, 0, 1})) out.fail("two-torsion D is not x^3+x+3");
    if (I2.N != Polynomial::from_longs(F, {1, 985, 1007, 0, 1})) out.fail("two-torsion N mismatch");
    if (Et2 != Curve::from_longs(F, 16, 192)) out.fail("two-torsion target is not (16, 192)");
  } catch (const std::exception& e) {
    out.fail(std::string("two-torsion: ") + e.what());
  }
  const double ms = millis_since(t0);
  if (ms >= 1000) out.fail("took " + fmt(ms) + " ms");
  if (out.ok) out.detail = "sextic/quintic, factorization and two-torsion case exact in " + fmt(ms) + " ms";
  return out;
}

// -- 3 ----------------------------------------------------------------------

double median_wp_millis(const Curve& E, std::size_t n, int reps) {
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    auto w = wp_expand_fast(E, n);
    t.push_back(millis_since(t0));
    if (w.size() != n) return -1;
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

Outcome criterion3() {
  Outcome out;
  auto F = make_field(mpz_class("4611686018427387847"));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Curve E = random_curve(rng, F);
    if (!(wp_expand_fast(E, 1024) == wp_expand_quadratic(E, 1024))) {
      out.fail("fast and quadratic expansions differ on curve " + std::to_string(i));
      break;
    }
  }
  Curve E = random_curve(rng, F);
  const double t2048 = median_wp_millis(E, 2048, 5);
  const double t4096 = median_wp_millis(E, 4096, 5);
  const double ratio = t4096 / t2048;
  if (t4096 >= 5000) out.fail("n=4096 took " + fmt(t4096) + " ms");
  if (ratio > 3.0) out.fail("time(4096)/time(2048) = " + fmt(ratio));
  const std::string timing =
      "n=4096 " + fmt(t4096) + " ms, n=2048 " + fmt(t2048) + " ms, ratio " + fmt(ratio);
  out.detail = out.ok ? "50 curves equal at n=1024; " + timing : out.detail + " (" + timing + ")";
  return out;
}

// -- 4 ----------------------------------------------------------------------

Outcome criterion4() {
  Outcome out;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  int instances = 0, odd = 0, even = 0;
  for (int i = 0; i < 100 && out.ok; ++i) {
    const unsigned long ell = 2 + i % 30;
    const unsigned long lo = 8 * ell + rng() % (100000 - 8 * ell - 1000);
    try {
      GeneratedInstance g = generate_instance(mpz_class(lo), mpz_class(100000), ell, 1000 + i);
      const Isogeny& truth = g.isogeny;
      if (truth.source.field()->modulus() > 100000) out.fail("generated p above 10^5");
      for (AlgorithmId a : all_algorithms()) {
        Isogeny I = run(a, truth.source, truth.target, ell, truth.sigma);
        if (I.D != truth.D || I.N != truth.N) {
          out.fail(std::string(algorithm_name(a)) + " disagrees with Velu at l=" + std::to_string(ell));
        }
        VerificationReport r = isogeny_verify(I, 8);
        if (!r.identity || !r.morphism || !r.ok()) {
          out.fail(std::string(algorithm_name(a)) + " fails verification at l=" + std::to_string(ell));
        }
      }
      ++instances;
      (ell % 2 ? odd : even)++;
    } catch (const std::exception& e) {
      out.fail("instance " + std::to_string(i) + " (l=" + std::to_string(ell) + "): " + e.what());
    }
  }
  const double s = millis_since(t0) / 1000;
  if (s >= 120) out.fail("took " + fmt(s) + " s");
  if (out.ok) {
    out.detail = std::to_string(instances) + " instances (" + std::to_string(odd) + " odd l, " +
                 std::to_string(even) + " even l) x 7 algorithms exact, identity + 8-sample morphism in " +
                 fmt(s) + " s";
  }
  return out;
}

// -- 5 and 6 ------------------------------------------------------------------

struct BenchTable {
  std::map<std::pair<std::string, unsigned long>, double> ms;
  std::vector<std::string> problems;
  bool ran = false;
};

BenchTable& bench_table() {
  static BenchTable t;
  if (t.ran) return t;
  t.ran = true;
  BenchConfig cfg;
  cfg.algos = {AlgorithmId::FastElkies, AlgorithmId::Elkies1998, AlgorithmId::FastElkiesPrime};
  cfg.ells = {511, 1023, 2047};
  cfg.p_bits = 62;
  cfg.repeats = 3;
  cfg.threads = 1;
  try {
    BenchOutcome o = run_bench(cfg, {});
    for (const auto& r : o.records) {
      if (!r.verified) t.problems.push_back(r.algo + " l=" + std::to_string(r.ell) + " unverified");
      t.ms[{r.algo, r.ell}] = r.wall_millis;
    }
    for (const auto& s : o.skipped) t.problems.push_back(s);
  } catch (const std::exception& e) {
    t.problems.push_back(e.what());
  }
  return t;
}

Outcome criterion5() {
  Outcome out;
  const auto t0 = Clock::now();
  BenchTable& t = bench_table();
  for (const auto& p : t.problems) out.fail(p);
  auto ms = [&](const char* a, unsigned long l) { return t.ms.count({a, l}) ? t.ms[{a, l}] : 0.0; };
  std::ostringstream info;
  for (unsigned long l : {511ul, 1023ul}) {
    const double rf = ms("fast-elkies", 2 * l + 1) / ms("fast-elkies", l);
    const double re = ms("elkies1998", 2 * l + 1) / ms("elkies1998", l);
    info << "l=" << l << ": fast " << fmt(rf) << ", e98 " << fmt(re) << "; ";
    if (!(rf <= 3.0)) out.fail("fast-elkies ratio " + fmt(rf) + " > 3.0 at l=" + std::to_string(l));
    if (!(re >= 3.2)) out.fail("elkies1998 ratio " + fmt(re) + " < 3.2 at l=" + std::to_string(l));
  }
  const double f = ms("fast-elkies", 2047), e = ms("elkies1998", 2047);
  info << "l=2047: fast " << fmt(f) << " ms vs e98 " << fmt(e) << " ms";
  if (!(f < e)) out.fail("fast-elkies not faster than elkies1998 at l=2047");
  const double s = millis_since(t0) / 1000;
  if (s >= 600) out.fail("took " + fmt(s) + " s");
  out.detail = (out.ok ? "" : out.detail + " | ") + info.str();
  return out;
}

Outcome criterion6() {
  Outcome out;
  BenchTable& t = bench_table();
  for (const auto& p : t.problems) out.fail(p);
  std::ostringstream info;
  for (unsigned long l : {511ul, 1023ul, 2047ul}) {
    const double fp = t.ms[{"fast-elkies-prime", l}], fe = t.ms[{"fast-elkies", l}];
    const double r = fp / fe;
    info << "l=" << l << ": " << fmt(r) << (l == 2047 ? "" : ", ");
    if (!(r >= 1.0 && r <= 20.0)) out.fail("ratio " + fmt(r) + " outside [1, 20] at l=" + std::to_string(l));
  }
  out.detail = (out.ok ? "fast-elkies-prime / fast-elkies " : out.detail + " | ") + info.str();
  return out;
}

// -- 7 ----------------------------------------------------------------------

struct Suite {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first;
  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first = what;
  }
};

template <class Fn>
Errc error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::NotFound;
}

Series rand_series(std::mt19937_64& rng, const FieldRef& F, std::size_t n, long c0 = -1) {
  Coeffs c = residues(rng, *F, n);
  if (c0 >= 0) c[0] = c0;
  return Series(F, std::move(c));
}

Polynomial rand_monic(std::mt19937_64& rng, const FieldRef& F, std::size_t d) {
  Coeffs c = residues(rng, *F, d + 1);
  c[d] = 1;
  return Polynomial(F, std::move(c));
}

Outcome criterion7() {
  Outcome out;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  const FieldRef fields[] = {make_field(mpz_class("4611686018427387847")), make_field(mpz_class(1009)),
                             make_field(mpz_class("170141183460469231731687303715884105727"))};
  std::vector<Suite> suites;

  {
    Suite s{"reciprocal"};
    for (int i = 0; i < 1500; ++i) {
      const FieldRef& F = fields[i % 3];
      const std::size_t n = i % 100 == 0 ? 4096 : 1 + rng() % 300;
      Series f = rand_series(rng, F, n);
      if (f.raw()[0] == 0) f = rand_series(rng, F, n, 1);
      Series prod = (f * series_reciprocal(f, n)).truncated(n);
      s.record(prod == Series::one(F, n), "f * 1/f != 1 at n=" + std::to_string(n));
    }
    suites.push_back(s);
  }
  {
    Suite s{"exp/log"};
    for (int i = 0; i < 1500; ++i) {
      const FieldRef& F = fields[i % 3 == 1 ? 0 : i % 3];
      const std::size_t n = 1 + rng() % 200;
      Series g = rand_series(rng, F, n, 1);
      s.record(series_exp(series_log(g, n), n) == g, "exp(log g) != g");
      Series f = rand_series(rng, F, n, 0);
      s.record(series_log(series_exp(f, n), n) == f, "log(exp f) != f");
    }
    suites.push_back(s);
  }
  {
    Suite s{"power sums"};
    for (int i = 0; i < 1500; ++i) {
      const FieldRef& F = fields[i % 3];
      const std::size_t d = rng() % 150;
      Polynomial f = rand_monic(rng, F, d);
      auto ps = poly_to_power_sums(f, d);
      s.record(power_sums_to_poly(F, ps) == f, "round trip failed at degree " + std::to_string(d));
    }
    suites.push_back(s);
  }
  {
    Suite s{"nonlinear ODE residual"};
    for (int i = 0; i < 500; ++i) {
      const FieldRef& F = fields[i % 2 == 0 ? 0 : 2];
      const std::size_t n = 2 + rng() % 120;
      const std::size_t deg = rng() % 7;
      std::vector<Series> G;
      for (std::size_t j = 0; j <= deg; ++j) G.push_back(rand_series(rng, F, n - 1));
      const FieldElement alpha(F, residue(rng, *F));
      // Pick G_0 so that G(0, alpha) = beta^2 for a random nonzero beta.
      FieldElement beta(F, residue(rng, *F));
      if (beta.is_zero()) beta = FieldElement(F, 1L);
      FieldElement at0(F, 0L), pw(F, 1L);
      for (std::size_t j = 0; j <= deg; ++j) {
        at0 = at0 + G[j].coeff(0) * pw;
        pw = pw * alpha;
      }
      Coeffs g0 = G[0].raw();
      g0[0] = (FieldElement(F, g0[0]) + beta * beta - at0).value();
      G[0] = Series(F, g0);
      Series f = solve_nonlinear_ode_sq(G, alpha, beta, n);
      // f'^2 - G(z, f) must vanish mod z^(n-1).
      Series fd = derivative(f);
      Series lhs = (fd * fd).truncated(n - 1);
      Series rhs = Series::zero(F, n - 1);
      Series fp = Series::one(F, n - 1);
      Series fn = f.truncated(n - 1);
      for (std::size_t j = 0; j <= deg; ++j) {
        rhs = rhs + (G[j] * fp).truncated(n - 1);
        fp = (fp * fn).truncated(n - 1);
      }
      s.record(lhs == rhs && f.coeff(0) == alpha && (n < 2 || f.coeff(1) == beta), "residual nonzero");
    }
    suites.push_back(s);
  }
  {
    Suite s{"pade"};
    for (int i = 0; i < 1000; ++i) {
      const FieldRef& F = fields[i % 3];
      const std::size_t dn = rng() % 40, dd = rng() % 40;
      Coeffs nc = residues(rng, *F, dn + 1), dc = residues(rng, *F, dd + 1);
      if (nc[dn] == 0) nc[dn] = 1;
      dc[dd] = 1;
      if (dc[0] == 0) dc[0] = 1;
      const Polynomial Np(F, nc), Dp(F, dc);
      const std::size_t prec = dn + dd + 1 + rng() % 5;
      Series f = Series::from_poly(Np, prec) * series_reciprocal(Series::from_poly(Dp, prec), prec);
      f = f.truncated(prec);
      RationalFunction r = pade_reconstruct(f, dn, dd);
      // Equal as rational functions; degrees within the bounds.
      const bool same = r.numerator() * Dp == Np * r.denominator();
      s.record(same && r.numerator().degree() <= static_cast<long>(dn) &&
                   r.denominator().degree() <= static_cast<long>(dd),
               "reconstruction differs");
    }
    suites.push_back(s);
  }
  {
    Suite s{"precision bookkeeping"};
    for (int i = 0; i < 400; ++i) {
      const FieldRef& F = fields[i % 3];
      const std::size_t n = 2 + rng() % 60;
      const std::size_t short_n = 1 + rng() % (n - 1);
      Series f1 = rand_series(rng, F, short_n, 1);
      Series f0 = rand_series(rng, F, short_n, 0);
      Series g0 = rand_series(rng, F, n, 0);
      s.record(error_of([&] { series_reciprocal(f1, n); }) == Errc::InsufficientPrecision, "reciprocal");
      s.record(error_of([&] { series_log(f1, n); }) == Errc::InsufficientPrecision, "log");
      s.record(error_of([&] { series_exp(f0, n); }) == Errc::InsufficientPrecision, "exp");
      s.record(error_of([&] { compose(f1, g0, n); }) == Errc::InsufficientPrecision, "compose");
      s.record(error_of([&] { f1.truncated(n); }) == Errc::InsufficientPrecision, "truncated");
      s.record(error_of([&] { f1.at(static_cast<long>(short_n)); }) == Errc::InsufficientPrecision, "at");
      const std::size_t dn = rng() % 5, dd = rng() % 5;
      Series tooshort = rand_series(rng, F, dn + dd + 1 > 1 ? 1 + rng() % (dn + dd) : 1, 1);
      if (tooshort.precision() < dn + dd + 1) {
        s.record(error_of([&] { pade_reconstruct(tooshort, dn, dd); }) == Errc::InsufficientPrecision, "pade");
      }
      s.record(error_of([&] {
                 solve_linear_ode(Series::one(F, short_n), g0, g0, FieldElement(F, 0L), n + 1);
               }) == Errc::InsufficientPrecision,
               "linear ode");
    }
    suites.push_back(s);
  }
  {
    Suite fnpn{"fnpn consistency"}, sig{"sigma read-off"};
    for (int i = 0; i < 400; ++i) {
      const unsigned long ell = 3 + i % 29;
      GeneratedInstance g = generate_instance(mpz_class(8 * ell), mpz_class(8 * ell + 4000), ell, 500 + i);
      const Isogeny& t = g.isogeny;
      const FieldRef& F = t.source.field();
      IsogenyWorkspace w98, wfe;
      AlgorithmOptions o98, ofe;
      o98.workspace = &w98;
      ofe.workspace = &wfe;
      o98.mode = ofe.mode = KernelMode::Full;
      elkies1998(t.source, t.target, ell, t.sigma, o98);
      fast_elkies(t.source, t.target, ell, t.sigma, ofe);
      // p_1..p_{l-2} from the recurrence equal the power sums of the Velu D.
      auto ps = poly_to_power_sums(t.D, ell - 1);
      bool ok = w98.psums.size() == ell && wfe.psums == w98.psums;
      for (std::size_t k = 1; ok && k < ell; ++k) ok = w98.psums[k] == ps[k - 1];
      fnpn.record(ok && w98.h && wfe.h && w98.h->raw() == wfe.h->raw(), "p_i disagree at l=" + std::to_string(ell));
      if (ell % 2 == 1) {
        // q_i = p_i / 2 in g-mode.
        o98.mode = KernelMode::Half;
        elkies1998(t.source, t.target, ell, t.sigma, o98);
        bool qok = w98.psums_halved;
        const FieldElement half = FieldElement(F, 2L).inverse();
        for (std::size_t k = 1; qok && k < w98.psums.size(); ++k) qok = w98.psums[k] == ps[k - 1] * half;
        fnpn.record(qok, "q_i != p_i/2 at l=" + std::to_string(ell));
      }
      sig.record(fast_elkies_prime(t.source, t.target, ell).sigma == t.sigma,
                 "fast-elkies-prime sigma at l=" + std::to_string(ell));
      sig.record(stark1972(t.source, t.target, ell).sigma == t.sigma, "stark1972 sigma at l=" + std::to_string(ell));
      sig.record(-t.D.coeff(ell - 2) == t.sigma, "Velu sigma vs D at l=" + std::to_string(ell));
    }
    suites.push_back(fnpn);
    suites.push_back(sig);
  }

  long total = 0;
  std::ostringstream info;
  for (const auto& s : suites) {
    total += s.cases;
    info << s.name << " " << s.cases << (s.failures ? " (" + std::to_string(s.failures) + " failed)" : "") << "; ";
    if (s.failures) out.fail(s.name + ": " + s.first);
  }
  const double sec = millis_since(t0) / 1000;
  if (total < 10000) out.fail("only " + std::to_string(total) + " cases");
  if (sec >= 300) out.fail("took " + fmt(sec) + " s");
  out.detail = (out.ok ? "" : out.detail + " | ") + std::to_string(total) + " cases in " + fmt(sec) + " s: " +
               info.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7};
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!pick.empty() && !pick.count(id)) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    all_ok = all_ok && o.ok;
    std::printf("%s criterion %d: %s\n", o.ok ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
