#include "isogenix/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "isogenix/generator.hpp"

namespace isogenix {

namespace {

constexpr std::uint64_t kMix = 0x9e3779b97f4a7c15ULL;

Isogeny run_one(AlgorithmId algo, const BenchInstance& inst, const FieldElement& sigma) {
  const Curve& E = inst.E;
  const Curve& Et = inst.Et;
  const unsigned long ell = inst.ell;
  switch (algo) {
    case AlgorithmId::Elkies1992:
      return elkies1992(E, Et, ell, sigma);
    case AlgorithmId::Elkies1998:
      return elkies1998(E, Et, ell, sigma);
    case AlgorithmId::FastElkies:
      return fast_elkies(E, Et, ell, sigma);
    case AlgorithmId::FastElkiesPrime:
      return fast_elkies_prime(E, Et, ell);
    case AlgorithmId::Stark1972:
      return stark1972(E, Et, ell);
    case AlgorithmId::Atkin1992:
      return atkin1992(E, Et, ell, sigma);
    case AlgorithmId::AtkinModComp:
      return atkin_modcomp(E, Et, ell, sigma);
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

struct Prepared {
  std::optional<BenchInstance> inst;
  std::optional<FieldElement> sigma;
  std::string failure;
};

}  // namespace

BenchFamily make_bench_family(unsigned p_bits, const std::vector<unsigned long>& ells, std::uint64_t seed) {
  if (p_bits < 16) throw Error(Errc::InvalidArgument, "benchmark fields need at least 16 bits");
  mpz_class M = 21;
  for (unsigned long l : ells) {
    if (l == 0) throw Error(Errc::InvalidDegree, "degree must be at least 1");
    mpz_lcm_ui(M.get_mpz_t(), M.get_mpz_t(), l);
  }
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 2, p_bits - 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, p_bits);
  // p = k M - 1 with 2^(b-1) <= p < 2^b.
  const mpz_class k_lo = (lo + M) / M;
  const mpz_class k_hi = hi / M;
  if (k_lo > k_hi) throw Error(Errc::NotFound, "no " + std::to_string(p_bits) + "-bit prime is -1 mod " + M.get_str());
  gmp_randclass rand(gmp_randinit_default);
  rand.seed(mpz_class(static_cast<unsigned long>(seed)));
  const mpz_class span = k_hi - k_lo + 1;
  mpz_class p;
  bool found = false;
  for (int t = 0; t < 200000 && !found; ++t) {
    p = (k_lo + rand.get_z_range(span)) * M - 1;
    found = mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
  }
  if (!found) throw Error(Errc::NotFound, "no suitable prime found");

  FieldRef F = make_field(p);
  Curve E0 = Curve::from_longs(F, 0, 1);
  std::mt19937_64 rng(seed ^ kMix);
  auto P7 = point_of_order(E0, p + 1, 7, rng, 64);
  if (!P7) throw Error(Errc::NotFound, "no point of order 7 on y^2 = x^3 + 1");
  auto [E1, I] = velu_from_kernel(E0, cyclic_subgroup(*P7, 7, E0));
  return BenchFamily{F, E1, static_cast<unsigned>(F->bits())};
}

BenchInstance make_bench_instance(const BenchFamily& fam, unsigned long ell, std::uint64_t seed) {
  const mpz_class order = fam.field->modulus() + 1;
  if (ell == 0 || order % ell != 0) {
    throw Error(Errc::NotFound, std::to_string(ell) + " does not divide p + 1 for this family");
  }
  if (ell == 1) {
    Isogeny id{fam.E1, fam.E1, 1, Polynomial::from_longs(fam.field, {0, 1}), Polynomial::from_longs(fam.field, {1}),
               FieldElement(fam.field, 0L), std::nullopt};
    return BenchInstance{fam.E1, fam.E1, 1, id};
  }
  std::mt19937_64 rng(seed ^ (kMix * ell));
  auto P = point_of_order(fam.E1, order, ell, rng, 64);
  if (!P) throw Error(Errc::NotFound, "no point of exact order " + std::to_string(ell));
  auto [Et, I] = velu_from_kernel(fam.E1, cyclic_subgroup(*P, ell, fam.E1));
  return BenchInstance{fam.E1, Et, ell, I};
}

std::string bench_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << r.algo << ',' << r.ell << ',' << r.p_bits << ',' << r.wall_millis << ',' << (r.verified ? "true" : "false")
     << ',' << r.seed;
  return os.str();
}

unsigned bench_worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ISOGENIX_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

BenchOutcome run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& on_record) {
  if (config.algos.empty() || config.ells.empty()) throw Error(Errc::InvalidArgument, "need algorithms and degrees");
  const BenchFamily fam = make_bench_family(config.p_bits, config.ells, config.seed);
  BenchOutcome out;

  std::vector<Prepared> prep(config.ells.size());
  const bool need_sigma = std::any_of(config.algos.begin(), config.algos.end(), requires_sigma);
  for (std::size_t i = 0; i < config.ells.size(); ++i) {
    const unsigned long ell = config.ells[i];
    try {
      prep[i].inst = make_bench_instance(fam, ell, config.seed);
      if (need_sigma) {
        Isogeny pre = fast_elkies_prime(prep[i].inst->E, prep[i].inst->Et, ell);
        if (pre.sigma != prep[i].inst->truth.sigma) throw Error(Errc::VerificationFailed, "sigma pre-pass disagrees");
        prep[i].sigma = pre.sigma;
      } else {
        prep[i].sigma = prep[i].inst->truth.sigma;
      }
    } catch (const Error& e) {
      prep[i].failure = e.what();
    }
  }

  struct Cell {
    std::size_t algo, ell;
  };
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < config.ells.size(); ++e) {
    for (std::size_t a = 0; a < config.algos.size(); ++a) cells.push_back({a, e});
  }
  std::vector<std::optional<BenchRecord>> slots(cells.size());
  std::vector<std::string> notes(cells.size());
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  const unsigned repeats = std::max(1u, config.repeats);

  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const AlgorithmId algo = config.algos[cells[c].algo];
      const Prepared& pr = prep[cells[c].ell];
      const unsigned long ell = config.ells[cells[c].ell];
      if (!pr.inst) {
        notes[c] = std::string(algorithm_name(algo)) + " l=" + std::to_string(ell) + ": " + pr.failure;
        continue;
      }
      BenchRecord rec{algorithm_name(algo), ell, fam.p_bits, 0, false, config.seed};
      std::vector<double> times;
      try {
        std::optional<Isogeny> last;
        for (unsigned r = 0; r < repeats; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          Isogeny I = run_one(algo, *pr.inst, *pr.sigma);
          const auto t1 = std::chrono::steady_clock::now();
          times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
          last = std::move(I);
        }
        std::sort(times.begin(), times.end());
        rec.wall_millis = times[times.size() / 2];
        rec.verified = isogeny_verify(*last).ok() && last->N == pr.inst->truth.N && last->D == pr.inst->truth.D;
        if (!rec.verified) notes[c] = rec.algo + " l=" + std::to_string(ell) + ": output does not match ground truth";
      } catch (const Error& e) {
        notes[c] = rec.algo + " l=" + std::to_string(ell) + ": " + e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      slots[c] = rec;
      if (on_record) on_record(rec);
    }
  };
  const unsigned nthreads = std::min<unsigned>(bench_worker_count(config.threads), static_cast<unsigned>(cells.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (slots[c]) out.records.push_back(*slots[c]);
    if (!notes[c].empty()) out.skipped.push_back(notes[c]);
  }
  return out;
}

}  // namespace isogenix
