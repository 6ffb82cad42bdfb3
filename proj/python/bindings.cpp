#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "isogenix/algorithms.hpp"
#include "isogenix/curve.hpp"
#include "isogenix/error.hpp"
#include "isogenix/generator.hpp"
#include "isogenix/instance.hpp"
#include "isogenix/selftest.hpp"

namespace py = pybind11;
using namespace isogenix;

namespace {

mpz_class to_mpz(const py::handle& v) { return mpz_class(py::str(v).cast<std::string>()); }

py::int_ to_int(const std::string& s) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10))); }

py::list ints(const std::vector<std::string>& v) {
  py::list out;
  for (const auto& s : v) out.append(to_int(s));
  return out;
}

KernelMode parse_mode(const std::string& m) {
  if (m == "auto") return KernelMode::Auto;
  if (m == "g" || m == "half") return KernelMode::Half;
  if (m == "d" || m == "full") return KernelMode::Full;
  throw Error(Errc::InvalidArgument, "mode must be auto, g or d");
}

py::dict isogeny_dict(const Isogeny& I) {
  py::dict d;
  d["ell"] = I.ell;
  d["At"] = to_int(I.target.A().to_string());
  d["Bt"] = to_int(I.target.B().to_string());
  d["sigma"] = to_int(I.sigma.to_string());
  d["D"] = ints(I.D.to_strings());
  d["N"] = ints(I.N.to_strings());
  d["g"] = I.g ? py::object(ints(I.g->to_strings())) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of isogenix";

  // Leaked on purpose: the translator may run during interpreter teardown.
  static PyObject* exc = PyErr_NewException("isogenix._core.IsogenixError", PyExc_RuntimeError, nullptr);
  m.attr("IsogenixError") = py::handle(exc);
  py::register_exception_translator([](std::exception_ptr ep) {
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc)(e.what());
      err.attr("code") = errc_name(e.code());
      PyErr_SetObject(exc, err.ptr());
    }
  });

  m.def("algorithms", [] {
    std::vector<std::string> out;
    for (AlgorithmId id : all_algorithms()) out.emplace_back(algorithm_name(id));
    return out;
  });

  m.def(
      "wp",
      [](py::object p, py::object A, py::object B, std::size_t n, const std::string& method) {
        FieldRef F = make_field(to_mpz(p));
        FieldElement a(F, to_mpz(A)), b(F, to_mpz(B));
        WpExpansion w = method == "quadratic" ? wp_expand_quadratic(a, b, n) : wp_expand_fast(a, b, n);
        py::list out;
        for (std::size_t i = 1; i <= w.size(); ++i) out.append(to_int(w.c(i).to_string()));
        return out;
      },
      py::arg("p"), py::arg("A"), py::arg("B"), py::arg("n"), py::arg("method") = "fast",
      "c_1..c_n of wp(z) = 1/z^2 + sum c_i z^(2i).");

  m.def(
      "isogeny",
      [](py::object p, py::object A, py::object B, py::object At, py::object Bt, unsigned long ell,
         const std::string& algo, py::object sigma, const std::string& mode) {
        auto id = parse_algorithm(algo);
        if (!id) throw Error(Errc::InvalidArgument, "unknown algorithm " + algo);
        FieldRef F = make_field(to_mpz(p));
        Curve E(FieldElement(F, to_mpz(A)), FieldElement(F, to_mpz(B)));
        Curve Et(FieldElement(F, to_mpz(At)), FieldElement(F, to_mpz(Bt)));
        std::optional<FieldElement> s;
        if (!sigma.is_none()) s = FieldElement(F, to_mpz(sigma));
        AlgorithmOptions opts;
        opts.mode = parse_mode(mode);
        Isogeny I = [&] {
          py::gil_scoped_release nogil;
          return compute_isogeny(*id, E, Et, ell, s, opts);
        }();
        return isogeny_dict(I);
      },
      py::arg("p"), py::arg("A"), py::arg("B"), py::arg("At"), py::arg("Bt"), py::arg("ell"),
      py::arg("algo") = "fast-elkies", py::arg("sigma") = py::none(), py::arg("mode") = "auto",
      "Normalized ell-isogeny E -> Et, verified before it is returned.");

  m.def(
      "generate",
      [](py::object p, unsigned long ell, std::uint64_t seed) {
        return instance_to_json(generate_instance(to_mpz(p), ell, seed).file);
      },
      py::arg("p"), py::arg("ell"), py::arg("seed") = 1, "A random instance as JSON text.");

  m.def(
      "verify",
      [](const std::string& json, std::size_t samples) {
        VerificationReport r = isogeny_verify(claimed_isogeny(resolve_instance(instance_from_json(json))), samples);
        py::dict d;
        d["ok"] = r.ok();
        d["identity"] = r.identity;
        d["invariants"] = r.invariants;
        d["morphism"] = r.morphism;
        d["nonsingular"] = r.nonsingular;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("instance_json"), py::arg("samples") = kDefaultMorphismSamples);

  m.def("selftest", [] {
    py::list out;
    for (const auto& r : run_selftest()) out.append(py::make_tuple(r.name, r.ok, r.detail));
    return out;
  });
}
