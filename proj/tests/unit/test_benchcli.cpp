#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "isogenix/bench.hpp"
#include "isogenix/generator.hpp"
#include "isogenix/instance.hpp"
#include "isogenix/selftest.hpp"

using namespace isogenix;
using namespace testutil;

namespace {

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isogenix::Error");
  return Errc::InvalidArgument;
}

InstanceFile f101_instance() {
  InstanceFile f;
  f.p = "101";
  f.A = "1";
  f.B = "1";
  f.At = "75";
  f.Bt = "16";
  f.ell = 11;
  f.sigma = "50";
  return f;
}

}  // namespace

TEST_CASE("instance JSON round-trips") {
  InstanceFile bare = f101_instance();
  CHECK(instance_from_json(instance_to_json(bare)) == bare);
  CHECK(instance_from_json(instance_to_json(bare, -1)) == bare);

  GeneratedInstance g = generate_instance(mpz_class(1009), 7, 5);
  CHECK(instance_from_json(instance_to_json(g.file)) == g.file);
  REQUIRE(g.file.D);
  CHECK(g.file.D->size() == 7);
  CHECK(g.file.D->back() == "1");
  CHECK(g.file.N->size() == 8);

  // Coefficients are decimal strings, ascending.
  const std::string js = instance_to_json(g.file);
  CHECK(js.find("\"p\": \"1009\"") != std::string::npos);
}

TEST_CASE("instance JSON rejects malformed input") {
  CHECK(code_of([] { instance_from_json("{"); }) == Errc::ParseError);
  CHECK(code_of([] { instance_from_json(R"({"p": 101})"); }) == Errc::ParseError);
  CHECK(code_of([] {
          instance_from_json(R"({"p":"101","A":"1","B":"1","At":"75","Bt":"16","ell":"eleven"})");
        }) == Errc::ParseError);
  CHECK(code_of([] {
          instance_from_json(R"({"p":"101","A":"1","B":"1","At":"75","Bt":"16","ell":3,"D":["1","1"],"N":["0","0","0","1"]})");
        }) == Errc::InvalidArgument);
}

TEST_CASE("resolved instances feed the verifier") {
  auto F = make_field(mpz_class(101));
  const Polynomial g = Polynomial::from_longs(F, {5, 97, 24, 89, 76, 1});
  Isogeny truth = fast_elkies(Curve::from_longs(F, 1, 1), Curve::from_longs(F, 75, 16), 11, FieldElement(F, 50L));
  InstanceFile f = instance_from_isogeny(truth);
  CHECK(f.A == "1");
  CHECK(f.Bt == "16");
  CHECK(f.sigma == std::optional<std::string>("50"));
  ResolvedInstance r = resolve_instance(f);
  Isogeny I = claimed_isogeny(r);
  CHECK(I.D == g * g);
  CHECK(I.N == truth.N);
  CHECK(isogeny_verify(I).ok());
  (*f.N)[3] = "16";
  CHECK_FALSE(isogeny_verify(claimed_isogeny(resolve_instance(f))).ok());

  CHECK(code_of([] { claimed_isogeny(resolve_instance(f101_instance())); }) == Errc::InvalidArgument);
  InstanceFile bad = f101_instance();
  bad.p = "100";
  CHECK(code_of([&] { resolve_instance(bad); }) == Errc::NotPrime);
}

TEST_CASE("generator") {
  SUBCASE("deterministic per seed") {
    GeneratedInstance a = generate_instance(mpz_class(10007), 7, 42);
    GeneratedInstance b = generate_instance(mpz_class(10007), 7, 42);
    CHECK(a.file == b.file);
    CHECK(isogeny_verify(a.isogeny).ok());
    CHECK(a.kernel.size() == 6);
    GeneratedInstance r1 = generate_instance(mpz_class(2000), mpz_class(4000), 5, 9);
    GeneratedInstance r2 = generate_instance(mpz_class(2000), mpz_class(4000), 5, 9);
    CHECK(r1.file == r2.file);
  }
  SUBCASE("degree two over F_1009") {
    GeneratedInstance g = generate_instance(mpz_class(1009), 2, 1);
    CHECK(g.isogeny.D.degree() == 1);
    CHECK(g.file.kernel_xs->size() == 1);
    CHECK(g.isogeny.D(FieldElement(g.isogeny.source.field(), mpz_class((*g.file.kernel_xs)[0]))).is_zero());
  }
  SUBCASE("impossible or out of range") {
    CHECK(code_of([] { generate_instance(mpz_class(101), 97, 1); }) == Errc::NotFound);
    CHECK(code_of([] { generate_instance(mpz_class(101), 1, 1); }) == Errc::InvalidDegree);
    CHECK(code_of([] { generate_instance(mpz_class(200), mpz_class(190), 3, 1); }) == Errc::NotFound);
    CHECK(code_of([] { generate_instance(mpz_class("4611686018427387847"), 3, 1); }) == Errc::FieldTooLarge);
  }
}

TEST_CASE("bench CSV and worker count") {
  CHECK(std::string(kBenchCsvHeader) == "algo,ell,p_bits,wall_millis,verified,seed");
  BenchRecord r{"fast-elkies", 511, 62, 4.0461, true, 1};
  CHECK(bench_csv_row(r) == "fast-elkies,511,62,4.046,true,1");
  r.verified = false;
  CHECK(bench_csv_row(r) == "fast-elkies,511,62,4.046,false,1");

  unsetenv("ISOGENIX_THREADS");
  CHECK(bench_worker_count(6) == 6);
  setenv("ISOGENIX_THREADS", "2", 1);
  CHECK(bench_worker_count(6) == 2);
  CHECK(bench_worker_count(1) == 1);
  CHECK(bench_worker_count(0) <= 2);
  setenv("ISOGENIX_THREADS", "junk", 1);
  CHECK(bench_worker_count(3) == 3);
  unsetenv("ISOGENIX_THREADS");
}

TEST_CASE("small bench run") {
  BenchConfig cfg;
  cfg.algos = {AlgorithmId::FastElkies, AlgorithmId::Elkies1998, AlgorithmId::Stark1972};
  cfg.ells = {5, 6, 7};
  cfg.p_bits = 40;
  cfg.repeats = 1;
  cfg.threads = 2;
  std::size_t seen = 0;
  BenchOutcome o = run_bench(cfg, [&](const BenchRecord&) { ++seen; });
  CHECK(seen == 9);
  REQUIRE(o.records.size() == 9);
  CHECK(o.skipped.empty());
  for (const auto& rec : o.records) {
    CHECK(rec.verified);
    CHECK(rec.p_bits == 40);
  }
  // Same seed, same instances.
  BenchFamily a = make_bench_family(40, {5, 6, 7}, 1), b = make_bench_family(40, {5, 6, 7}, 1);
  CHECK(a.field->modulus() == b.field->modulus());
  CHECK(a.E1 == b.E1);
  CHECK(make_bench_instance(a, 7, 1).truth.D == make_bench_instance(b, 7, 1).truth.D);

  cfg.ells.clear();
  CHECK(code_of([&] { run_bench(cfg, {}); }) == Errc::InvalidArgument);
  CHECK(code_of([] { make_bench_family(8, {3}, 1); }) == Errc::InvalidArgument);
}

TEST_CASE("selftest passes") {
  for (const auto& r : run_selftest()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
