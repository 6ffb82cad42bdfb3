#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isogenix/algorithms.hpp"

namespace isogenix {

/// Supersingular family over a prime p of about p_bits bits with p = -1 mod lcm(3, 7, ells):
/// E0: y^2 = x^3 + 1 has p + 1 points, and E1 = E0 / <order-7 point> has j != 0.
struct BenchFamily {
  FieldRef field;
  Curve E1;
  unsigned p_bits;
};

/// A ground-truth instance: Vélu on a point of exact order l of E1.
struct BenchInstance {
  Curve E, Et;
  unsigned long ell;
  Isogeny truth;
};

/// NotFound when no suitable prime turns up; InvalidArgument for p_bits < 16.
BenchFamily make_bench_family(unsigned p_bits, const std::vector<unsigned long>& ells, std::uint64_t seed);
/// NotFound when l does not divide p + 1 or no point of exact order l turns up.
BenchInstance make_bench_instance(const BenchFamily& fam, unsigned long ell, std::uint64_t seed);

struct BenchRecord {
  std::string algo;
  unsigned long ell = 0;
  unsigned p_bits = 0;
  double wall_millis = 0;
  bool verified = false;
  std::uint64_t seed = 0;
};

struct BenchConfig {
  std::vector<AlgorithmId> algos;
  std::vector<unsigned long> ells;
  unsigned p_bits = 62;
  std::uint64_t seed = 1;
  unsigned repeats = 3;
  /// 0 means ISOGENIX_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct BenchOutcome {
  std::vector<BenchRecord> records;
  /// One line per skipped cell with the reason.
  std::vector<std::string> skipped;
};

inline constexpr const char* kBenchCsvHeader = "algo,ell,p_bits,wall_millis,verified,seed";
std::string bench_csv_row(const BenchRecord& r);

/// min(requested or hardware concurrency, ISOGENIX_THREADS), at least 1.
unsigned bench_worker_count(unsigned requested);

/// One record per (algo, l) in config order; timings are medians over `repeats` runs.
/// sigma for the algorithms that need it comes from a fast_elkies_prime pass,
/// checked against the ground truth. `on_record` is called as rows complete.
BenchOutcome run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& on_record = {});

}  // namespace isogenix
