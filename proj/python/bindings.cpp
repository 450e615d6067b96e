#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fftp/dft.hpp"
#include "fftp/intmul.hpp"
#include "fftp/primes.hpp"
#include "fftp/transform.hpp"

namespace py = pybind11;

namespace {

using fftp::Natural;
using fftp::dft::Poly;
using fftp::fp::Field;

// Python ints cross the boundary as hex strings.
Natural to_natural(const py::int_& x) {
  if (py::cast<bool>(x.attr("__lt__")(0))) throw py::value_error("expected a non-negative integer");
  return Natural::from_hex(py::cast<std::string>(x.attr("__format__")("x")));
}

py::int_ to_int(const Natural& x) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(x.to_hex().c_str(), nullptr, 16)));
}

fftp::transform::Profile profile_from(const std::string& name) {
  using fftp::transform::Profile;
  if (name == "base") return Profile::base_case();
  if (name == "single") return Profile::single_recursion();
  if (name == "double") return Profile::double_recursion();
  if (name == "paper") return Profile::paper_faithful();
  return Profile::parse(name);
}

py::dict record_dict(const fftp::primes::ApRecord& r) {
  py::dict d;
  d["q"] = r.q;
  d["phi_q"] = r.phi;
  d["P_q"] = r.least_prime;
  d["ratio_num"] = r.ratio_num;
  d["ratio_den"] = r.ratio_den;
  return d;
}

// Field of p0(m) together with the input and a root of order len(values).
struct Setup {
  std::shared_ptr<const Field> field;
  Poly values;
  fftp::fp::Element zeta;
};

Setup setup(std::size_t m, const std::vector<py::int_>& values) {
  Setup s{fftp::transform::field_for(m), {}, {}};
  for (const auto& v : values) s.values.push_back(s.field->from(to_natural(v)));
  s.zeta = s.field->root_of_unity(values.size());
  return s;
}

std::vector<py::int_> to_ints(const Field& field, const Poly& x) {
  std::vector<py::int_> out;
  for (const auto& e : x) out.push_back(to_int(field.to_natural(e)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Integer multiplication through transforms over FFT primes";

  py::register_exception<fftp::primes::NotFound>(mod, "NotFound", PyExc_LookupError);
  py::register_exception<fftp::transform::ParameterInfeasible>(mod, "ParameterInfeasible",
                                                              PyExc_ValueError);

  mod.def(
      "multiply",
      [](const py::int_& u, const py::int_& v, const std::string& engine,
         const std::string& profile) {
        const Natural a = to_natural(u), b = to_natural(v);
        Natural out;
        {
          py::gil_scoped_release release;
          fftp::intmul::MultiplierOptions options;
          options.engine = fftp::intmul::parse_engine(engine);
          options.profile = profile_from(profile);
          options.force_transform = true;
          out = fftp::intmul::Multiplier(options).multiply(a, b);
        }
        return to_int(out);
      },
      py::arg("u"), py::arg("v"), py::arg("engine") = "fft", py::arg("profile") = "single");

  mod.def(
      "plan",
      [](std::size_t n) {
        const auto p = fftp::intmul::make_plan(n);
        py::dict d;
        d["n"] = p.n;
        d["k"] = p.k;
        d["m"] = p.m;
        d["b"] = p.b;
        d["d"] = p.d_chunks;
        d["ell"] = p.ell;
        d["L"] = p.L;
        d["p"] = to_int(p.field->modulus());
        return d;
      },
      py::arg("n"));

  mod.def("is_prime", [](const py::int_& n) { return fftp::primes::is_prime(to_natural(n)); },
          py::arg("n"));

  mod.def(
      "find_prime",
      [](std::size_t m, std::optional<py::int_> a_max) {
        const Natural bound = a_max ? to_natural(*a_max) : fftp::primes::default_a_max(m);
        const auto p = fftp::primes::find_p0(m, bound);
        return py::make_tuple(to_int(p.a), to_int(p.p));
      },
      py::arg("m"), py::arg("a_max") = py::none());

  mod.def("find_all_a", &fftp::primes::find_all_a, py::arg("m"), py::arg("a_max"));

  mod.def("p_of_q", [](std::uint64_t q) { return record_dict(fftp::primes::p_of_q(q)); },
          py::arg("q"));

  mod.def(
      "ap_scan",
      [](std::uint64_t q_max) {
        py::list rows;
        const auto summary = fftp::primes::ap_scan(
            q_max, [&](const fftp::primes::ApRecord& r) { rows.append(record_dict(r)); });
        py::dict d;
        d["rows"] = rows;
        d["best"] = record_dict(summary.best);
        d["max_at_q2"] = summary.max_at_q2;
        d["exceeding"] = summary.exceeding.size();
        return d;
      },
      py::arg("q_max"));

  mod.def(
      "dft",
      [](std::size_t m, const std::vector<py::int_>& values) {
        const Setup s = setup(m, values);
        return to_ints(*s.field, fftp::dft::dft_naive(*s.field, s.values, s.zeta));
      },
      py::arg("m"), py::arg("values"),
      "Naive DFT of length len(values) over p0(m) with the field's canonical root.");

  mod.def(
      "transform",
      [](std::size_t m, const std::vector<py::int_>& values, const std::string& profile) {
        const Setup s = setup(m, values);
        return to_ints(*s.field,
                       fftp::transform::transform(*s.field, s.values, s.zeta, profile_from(profile)));
      },
      py::arg("m"), py::arg("values"), py::arg("profile") = "single");

  mod.def(
      "inverse_transform",
      [](std::size_t m, const std::vector<py::int_>& values, const std::string& profile) {
        const Setup s = setup(m, values);
        return to_ints(*s.field, fftp::transform::inverse_transform(*s.field, s.values, s.zeta,
                                                                    profile_from(profile)));
      },
      py::arg("m"), py::arg("values"), py::arg("profile") = "single");
}
