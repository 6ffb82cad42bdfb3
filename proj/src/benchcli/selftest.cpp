#include "isogenix/selftest.hpp"

#include <functional>
#include <sstream>

#include "isogenix/algorithms.hpp"
#include "isogenix/generator.hpp"

namespace isogenix {

namespace {

std::string show(const Coeffs& c, std::size_t n) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n && i < c.size(); ++i) os << (i ? ", " : "") << c[i].get_str();
  os << ']';
  return os.str();
}

bool prefix_is(const Coeffs& c, std::initializer_list<long> want) {
  if (c.size() < want.size()) return false;
  std::size_t i = 0;
  for (long w : want) {
    if (c[i++] != w) return false;
  }
  return true;
}

Isogeny dispatch(AlgorithmId a, const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                 const AlgorithmOptions& o = {}) {
  switch (a) {
    case AlgorithmId::Elkies1992:
      return elkies1992(E, Et, ell, sigma, o);
    case AlgorithmId::Elkies1998:
      return elkies1998(E, Et, ell, sigma, o);
    case AlgorithmId::FastElkies:
      return fast_elkies(E, Et, ell, sigma, o);
    case AlgorithmId::FastElkiesPrime:
      return fast_elkies_prime(E, Et, ell, o);
    case AlgorithmId::Stark1972:
      return stark1972(E, Et, ell, o);
    case AlgorithmId::Atkin1992:
      return atkin1992(E, Et, ell, sigma, o);
    case AlgorithmId::AtkinModComp:
      return atkin_modcomp(E, Et, ell, sigma, o);
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

void check(std::vector<SelftestResult>& out, const std::string& name, const std::function<std::string()>& body) {
  SelftestResult r{name, false, {}};
  try {
    r.detail = body();
    r.ok = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  out.push_back(std::move(r));
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> out;

  auto F101 = make_field(mpz_class(101));
  const Curve E1 = Curve::from_longs(F101, 1, 1), Et1 = Curve::from_longs(F101, 75, 16);
  const FieldElement s1(F101, 50L);
  const Polynomial g1 = Polynomial::from_longs(F101, {5, 97, 24, 89, 76, 1});
  const Polynomial N1 = Polynomial::from_longs(F101, {15, 24, 5, 15, 43, 81, 39, 71, 44, 61, 51, 1});

  auto F1009 = make_field(mpz_class(1009));
  const Curve E2 = Curve::from_longs(F1009, 1, 3), Et2 = Curve::from_longs(F1009, 830, 82);
  const FieldElement s2(F1009, 739L);
  const Polynomial D2 = Polynomial::from_longs(F1009, {399, 533, 659, 289, 270, 1});
  const Polynomial N2 = Polynomial::from_longs(F1009, {203, 555, 382, 566, 325, 270, 1});

  check(out, "wp F101 c1 c2", [&]() -> std::string {
    auto c = wp_expand_fast(E1, 2);
    if (c.c(1).value() != 20 || c.c(2).value() != 72) return "got " + show(c.raw(), 2);
    return {};
  });

  check(out, "F101 l=11 intermediates", [&]() -> std::string {
    IsogenyWorkspace ws;
    AlgorithmOptions o;
    o.workspace = &ws;
    o.mode = KernelMode::Full;
    fast_elkies(E1, Et1, 11, s1, o);
    if (!prefix_is(ws.S->raw(), {0, 1, 0, 0, 0, 68, 0, 66, 0, 60, 0, 84})) return "S = " + show(ws.S->raw(), 12);
    if (!prefix_is(ws.U->raw(), {1, 0, 66, 70, 16, 96})) return "U = " + show(ws.U->raw(), 6);
    o.mode = KernelMode::Half;
    fast_elkies(E1, Et1, 11, s1, o);
    Coeffs q;
    for (const auto& x : ws.psums) q.push_back(x.value());
    if (!prefix_is(q, {5, 25, 43, 91, 86, 63})) return "q = " + show(q, 6);
    return {};
  });

  for (AlgorithmId a : all_algorithms()) {
    check(out, std::string("F101 l=11 ") + algorithm_name(a), [&, a]() -> std::string {
      Isogeny I = dispatch(a, E1, Et1, 11, s1);
      if (I.D != g1 * g1) return "D = " + show(I.D.raw(), 11);
      if (I.N != N1) return "N = " + show(I.N.raw(), 12);
      if (!I.g || *I.g != g1) return I.g ? "g = " + show(I.g->raw(), 6) : std::string("no g");
      if (I.sigma != s1) return "sigma = " + I.sigma.to_string();
      if (!isogeny_verify(I).ok()) return "verification: " + isogeny_verify(I).first_failure();
      return {};
    });
  }

  for (AlgorithmId a : all_algorithms()) {
    check(out, std::string("F1009 l=6 ") + algorithm_name(a), [&, a]() -> std::string {
      Isogeny I = dispatch(a, E2, Et2, 6, s2);
      if (I.D != D2) return "D = " + show(I.D.raw(), 6);
      if (I.N != N2) return "N = " + show(I.N.raw(), 7);
      if (!isogeny_verify(I).ok()) return "verification: " + isogeny_verify(I).first_failure();
      return {};
    });
  }

  check(out, "F1009 two-torsion Velu", [&]() -> std::string {
    auto pts = kernel_points_from_xs(E2, {FieldElement(F1009, 66L), FieldElement(F1009, 333L), FieldElement(F1009, 610L)});
    auto [Et, I] = velu_from_kernel(E2, pts);
    if (Et != Curve::from_longs(F1009, 16, 192)) return "target (" + Et.A().to_string() + ", " + Et.B().to_string() + ")";
    if (I.N != Polynomial::from_longs(F1009, {1, 985, 1007, 0, 1})) return "N = " + show(I.N.raw(), 5);
    return {};
  });

  for (unsigned long ell = 2; ell <= 13; ++ell) {
    check(out, "random agreement l=" + std::to_string(ell), [&, ell]() -> std::string {
      GeneratedInstance g = generate_instance(mpz_class(1000), mpz_class(5000), ell, 7 * ell + 1);
      const Isogeny& t = g.isogeny;
      for (AlgorithmId a : all_algorithms()) {
        Isogeny I = dispatch(a, t.source, t.target, ell, t.sigma);
        if (I.D != t.D || I.N != t.N) return std::string(algorithm_name(a)) + " disagrees with Velu";
      }
      return {};
    });
  }
  return out;
}

}  // namespace isogenix
