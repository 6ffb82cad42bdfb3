// isogenix command-line front end.
//
// Exit codes: 0 ok, 1 verification or other failure, 2 sigma required,
// 3 computed isogeny failed verification, 4 characteristic too small, 64 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "isogenix/algorithms.hpp"
#include "isogenix/bench.hpp"
#include "isogenix/generator.hpp"
#include "isogenix/instance.hpp"
#include "isogenix/selftest.hpp"

using namespace isogenix;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitSigma = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCharacteristic = 4;
constexpr int kExitUsage = 64;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::SigmaRequired:
      return kExitSigma;
    case Errc::VerificationFailed:
      return kExitVerification;
    case Errc::CharacteristicTooSmall:
      return kExitCharacteristic;
    case Errc::ParseError:
    case Errc::InvalidArgument:
    case Errc::InvalidDegree:
    case Errc::NotPrime:
    case Errc::TooSmall:
    case Errc::SingularCurve:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bracketed(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "]";
}

// Curve data from --instance or from individual flags.
struct CurveArgs {
  std::string instance;
  std::string p, a, b, at, bt, sigma;
  unsigned long ell = 0;

  void add(CLI::App* cmd) {
    cmd->add_option("--instance", instance, "instance JSON file ('-' for stdin)");
    cmd->add_option("--p", p, "field characteristic");
    cmd->add_option("--a", a, "A of the source curve");
    cmd->add_option("--b", b, "B of the source curve");
    cmd->add_option("--at", at, "A of the target curve");
    cmd->add_option("--bt", bt, "B of the target curve");
    cmd->add_option("--ell", ell, "isogeny degree");
    cmd->add_option("--sigma", sigma, "sum of the kernel abscissas");
  }

  InstanceFile load() const {
    InstanceFile f;
    if (!instance.empty()) f = instance_from_json(read_file(instance));
    auto set = [](std::string& dst, const std::string& src) {
      if (!src.empty()) dst = src;
    };
    set(f.p, p);
    set(f.A, a);
    set(f.B, b);
    set(f.At, at);
    set(f.Bt, bt);
    if (ell) f.ell = ell;
    if (!sigma.empty()) f.sigma = sigma;
    if (f.p.empty() || f.A.empty() || f.B.empty() || f.At.empty() || f.Bt.empty() || f.ell == 0) {
      throw Error(Errc::InvalidArgument, "need p, A, B, At, Bt and ell (flags or --instance)");
    }
    return f;
  }
};

int cmd_wp(const std::string& p, const std::string& a, const std::string& b, std::size_t n, const std::string& algo,
           bool as_json) {
  FieldRef F = make_field(p);
  // The expansion is formal, so singular (A, B) are accepted here.
  FieldElement A(F, a), B(F, b);
  WpExpansion c = algo == "fast" ? wp_expand_fast(A, B, n) : wp_expand_quadratic(A, B, n);
  std::vector<std::string> out;
  for (const auto& x : c.raw()) out.push_back(x.get_str());
  if (as_json) {
    std::cout << json(out).dump() << '\n';
  } else {
    for (const auto& s : out) std::cout << s << '\n';
  }
  return kExitOk;
}

int cmd_isogeny(const CurveArgs& args, const std::string& algo_name, bool full_d, bool as_json) {
  auto algo = parse_algorithm(algo_name);
  if (!algo) throw Error(Errc::InvalidArgument, "unknown algorithm " + algo_name);
  ResolvedInstance r = resolve_instance(args.load());
  AlgorithmOptions opts;
  if (full_d) opts.mode = KernelMode::Full;
  Isogeny I = compute_isogeny(*algo, r.E, r.Et, r.ell, r.sigma, opts);
  if (as_json) {
    json j = json::parse(instance_to_json(instance_from_isogeny(I)));
    j["algo"] = algorithm_name(*algo);
    if (I.g) j["g"] = I.g->to_strings();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sigma = " << I.sigma.to_string() << '\n';
    std::cout << "N = " << bracketed(I.N.to_strings()) << '\n';
    std::cout << "D = " << bracketed(I.D.to_strings()) << '\n';
    if (I.g) std::cout << "g = " << bracketed(I.g->to_strings()) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const std::string& p, const std::string& p_min, const std::string& p_max, unsigned long ell,
            std::uint64_t seed, std::size_t budget) {
  GeneratedInstance g = [&] {
    if (!p.empty()) return generate_instance(mpz_class(p), ell, seed, budget);
    if (p_min.empty() || p_max.empty()) throw Error(Errc::InvalidArgument, "need --p or both --p-min and --p-max");
    return generate_instance(mpz_class(p_min), mpz_class(p_max), ell, seed, budget);
  }();
  std::cout << instance_to_json(g.file) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& path, std::size_t samples) {
  ResolvedInstance r = resolve_instance(instance_from_json(read_file(path)));
  VerificationReport rep = isogeny_verify(claimed_isogeny(r), samples);
  std::cerr << "identity: " << (rep.identity ? "ok" : "FAIL") << '\n'
            << "invariants: " << (rep.invariants ? "ok" : "FAIL") << '\n'
            << "morphism: " << (rep.morphism ? "ok" : "FAIL") << '\n'
            << "nonsingular: " << (rep.nonsingular ? "ok" : "FAIL") << '\n';
  if (!rep.ok()) {
    std::cerr << "verification failed: " << rep.first_failure() << '\n';
    return kExitFail;
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& algos, const std::vector<unsigned long>& ells, unsigned p_bits,
              const std::string& csv, std::uint64_t seed, unsigned repeats, unsigned threads) {
  BenchConfig cfg;
  for (const auto& a : algos) {
    auto id = parse_algorithm(a);
    if (!id) throw Error(Errc::InvalidArgument, "unknown algorithm " + a);
    cfg.algos.push_back(*id);
  }
  cfg.ells = ells;
  cfg.p_bits = p_bits;
  cfg.seed = seed;
  cfg.repeats = repeats;
  cfg.threads = threads;

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!csv.empty() && csv != "-") {
    file.open(csv, std::ios::app);
    if (!file) throw Error(Errc::InvalidArgument, "cannot open " + csv);
    file.seekp(0, std::ios::end);
    os = &file;
  }
  if (os == &std::cout || file.tellp() == 0) *os << kBenchCsvHeader << '\n';
  BenchOutcome out = run_bench(cfg, [&](const BenchRecord& r) { *os << bench_csv_row(r) << '\n' << std::flush; });
  for (const auto& s : out.skipped) std::cerr << "skipped: " << s << '\n';
  bool all = out.skipped.empty();
  for (const auto& r : out.records) all = all && r.verified;
  return all ? kExitOk : kExitFail;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& r : run_selftest()) {
    std::cout << (r.ok ? "ok    " : "FAIL  ") << r.name;
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << '\n';
    ok = ok && r.ok;
  }
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized isogenies between elliptic curves over prime fields"};
  app.require_subcommand(1);

  std::string wp_p, wp_a, wp_b, wp_algo = "fast";
  std::size_t wp_n = 0;
  bool wp_json = false;
  auto* wp = app.add_subcommand("wp", "Laurent coefficients c_1..c_n of the Weierstrass function");
  wp->add_option("--p", wp_p, "field characteristic")->required();
  wp->add_option("--a", wp_a, "curve coefficient A")->required();
  wp->add_option("--b", wp_b, "curve coefficient B")->required();
  wp->add_option("--n", wp_n, "number of coefficients")->required();
  wp->add_option("--algo", wp_algo, "quadratic or fast")->check(CLI::IsMember({"quadratic", "fast"}));
  wp->add_flag("--json", wp_json, "print a JSON array");

  CurveArgs iso_args;
  std::string iso_algo = "fast-elkies";
  bool iso_full = false, iso_json = false;
  auto* iso = app.add_subcommand("isogeny", "compute and verify the normalized isogeny");
  iso_args.add(iso);
  iso->add_option("--algo", iso_algo, "elkies1992, elkies1998, fast-elkies, fast-elkies-prime, stark1972, atkin1992, atkin-modcomp");
  iso->add_flag("--full-d", iso_full, "compute D directly even for odd degrees");
  iso->add_flag("--json", iso_json, "print JSON");

  std::string gen_p, gen_pmin, gen_pmax;
  unsigned long gen_ell = 0;
  std::uint64_t gen_seed = 1;
  std::size_t gen_budget = kDefaultGenBudget;
  auto* gen = app.add_subcommand("gen", "generate a Velu ground-truth instance");
  gen->add_option("--p", gen_p, "prime field characteristic");
  gen->add_option("--p-min", gen_pmin, "lower end of a prime range");
  gen->add_option("--p-max", gen_pmax, "upper end of a prime range");
  gen->add_option("--ell", gen_ell, "kernel order")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--budget", gen_budget, "curves to try before giving up");

  std::string ver_path;
  std::size_t ver_samples = kDefaultMorphismSamples;
  auto* ver = app.add_subcommand("verify", "check the isogeny stored in an instance");
  ver->add_option("instance", ver_path, "instance JSON file ('-' for stdin)")->required();
  ver->add_option("--samples", ver_samples, "random point pairs for the morphism check");

  std::vector<std::string> b_algos{"fast-elkies", "elkies1998"};
  std::vector<unsigned long> b_ells;
  unsigned b_bits = 62, b_repeats = 3, b_threads = 0;
  std::string b_csv;
  std::uint64_t b_seed = 1;
  auto* bench = app.add_subcommand("bench", "time algorithms on large-characteristic instances");
  bench->add_option("--algos", b_algos, "comma-separated algorithm names")->delimiter(',');
  bench->add_option("--ells", b_ells, "comma-separated degrees")->delimiter(',')->required();
  bench->add_option("--p-bits", b_bits, "bit size of p");
  bench->add_option("--csv", b_csv, "append rows to this file (default stdout)");
  bench->add_option("--seed", b_seed, "random seed");
  bench->add_option("--repeats", b_repeats, "runs per cell; the median is reported");
  bench->add_option("--threads", b_threads, "worker threads (ISOGENIX_THREADS caps this)");

  auto* self = app.add_subcommand("selftest", "run the built-in golden fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*wp) return cmd_wp(wp_p, wp_a, wp_b, wp_n, wp_algo, wp_json);
    if (*iso) return cmd_isogeny(iso_args, iso_algo, iso_full, iso_json);
    if (*gen) return cmd_gen(gen_p, gen_pmin, gen_pmax, gen_ell, gen_seed, gen_budget);
    if (*ver) return cmd_verify(ver_path, ver_samples);
    if (*bench) {
      if (b_ells.empty() || b_algos.empty()) {
        std::cerr << "bench: --ells and --algos must be nonempty\n";
        return kExitUsage;
      }
      return cmd_bench(b_algos, b_ells, b_bits, b_csv, b_seed, b_repeats, b_threads);
    }
    if (*self) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
