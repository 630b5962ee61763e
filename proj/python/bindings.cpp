#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "restrictlab/fuzz.hpp"
#include "restrictlab/parabola.hpp"
#include "restrictlab/parallel.hpp"
#include "restrictlab/recovery.hpp"
#include "restrictlab/restriction.hpp"
#include "restrictlab/zmod.hpp"

namespace py = pybind11;
using namespace restrictlab;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

template <class Domain>
Grid2D<Domain> to_grid(const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw py::value_error("expected a square N x N array");
  }
  const auto n = a.shape(0);
  std::vector<Complex> values(a.data(), a.data() + n * n);
  return Grid2D<Domain>(make_ring(n), std::move(values));
}

template <class Domain>
ComplexArray to_array(const Grid2D<Domain>& g) {
  const auto n = static_cast<py::ssize_t>(g.side());
  ComplexArray out({n, n});
  std::copy(g.values().begin(), g.values().end(), out.mutable_data());
  return out;
}

ComplexArray to_array(const std::vector<Complex>& v) {
  ComplexArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<Complex> to_vector(const ComplexArray& a) {
  if (a.ndim() != 1) throw py::value_error("expected a one-dimensional array");
  return {a.data(), a.data() + a.shape(0)};
}

py::dict report_dict(const RestrictionReport& r) {
  py::dict d;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["ratio"] = r.ratio;
  d["constant"] = r.constant;
  d["satisfied"] = r.satisfied;
  return d;
}

py::dict result_dict(const RecoveryResult& r) {
  py::dict d;
  d["recovered"] = to_array(r.recovered);
  d["iterations"] = r.iterations;
  d["final_objective"] = r.final_objective;
  d["residual"] = r.residual;
  d["status"] = to_string(r.status);
  d["exactness"] = to_string(r.exactness);
  d["error"] = r.error ? py::cast(*r.error) : py::none();
  return d;
}

std::vector<Frequency> to_frequencies(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& p) {
  std::vector<Frequency> out;
  for (const auto& [a, b] : p) out.push_back({a, b});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Restriction estimates and signal recovery on (Z/NZ)^2";
  m.attr("__version__") = RESTRICTLAB_VERSION;

  py::class_<RingContext>(m, "Ring")
      .def(py::init<std::int64_t>(), py::arg("modulus"))
      .def_property_readonly("modulus", &RingContext::modulus)
      .def_property_readonly("omega", &RingContext::omega)
      .def_property_readonly("squarefree", &RingContext::squarefree)
      .def_property_readonly("prime_factors",
                             [](const RingContext& r) {
                               std::vector<std::pair<std::uint64_t, int>> out;
                               for (const auto& f : r.prime_factors()) {
                                 out.emplace_back(f.prime, f.multiplicity);
                               }
                               return out;
                             })
      .def("__repr__",
           [](const RingContext& r) { return "Ring(" + std::to_string(r.modulus()) + ")"; });

  m.def("square_roots", [](std::uint64_t c, std::int64_t n) {
    return square_roots_mod(c, make_ring(n));
  }, py::arg("c"), py::arg("n"));
  m.def("count_square_roots", [](std::uint64_t c, std::int64_t n) {
    return count_square_roots(c, make_ring(n));
  }, py::arg("c"), py::arg("n"));
  m.def("crt", [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
    std::vector<Congruence> system;
    for (const auto& [v, mod] : pairs) system.push_back({v, mod});
    return crt_combine(system);
  }, py::arg("congruences"));

  m.def("dft", [](const ComplexArray& f) { return to_array(dft(to_grid<SpaceDomain>(f))); },
        py::arg("f"));
  m.def("idft",
        [](const ComplexArray& s) { return to_array(idft(to_grid<FrequencyDomain>(s))); },
        py::arg("spectrum"));

  m.def("parabola", [](std::int64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const ParabolaSet sigma(make_ring(n));
    for (const auto& p : sigma.points()) out.emplace_back(p.first, p.second);
    return out;
  }, py::arg("n"));
  m.def("exp_sum", [](std::int64_t n, std::uint64_t m1, std::uint64_t m2) {
    return exp_sum(ParabolaSet(make_ring(n)), Frequency{m1 % static_cast<std::uint64_t>(n),
                                                        m2 % static_cast<std::uint64_t>(n)});
  }, py::arg("n"), py::arg("m1"), py::arg("m2"));
  m.def("decay_profile", [](std::int64_t n) {
    const auto p = decay_profile(ParabolaSet(make_ring(n)));
    py::dict d;
    d["max_nontrivial"] = p.max_nontrivial;
    d["max_ratio"] = p.max_ratio;
    d["witness"] = py::make_tuple(p.witness.first, p.witness.second);
    py::array_t<double> mags({static_cast<py::ssize_t>(n), static_cast<py::ssize_t>(n)});
    std::copy(p.magnitudes.begin(), p.magnitudes.end(), mags.mutable_data());
    d["magnitudes"] = mags;
    return d;
  }, py::arg("n"));
  m.def("energy", [](std::int64_t n, std::optional<std::vector<std::size_t>> subset) {
    const ParabolaSet sigma(make_ring(n));
    const auto r = subset ? energy_exact(sigma, std::span<const std::size_t>(*subset))
                          : energy_exact(sigma);
    py::dict d;
    d["subset_size"] = r.subset_size;
    d["energy"] = r.energy;
    d["bound"] = r.bound;
    d["max_rep"] = r.max_rep;
    return d;
  }, py::arg("n"), py::arg("subset") = py::none());

  m.def("extend", [](std::int64_t n, const ComplexArray& c) {
    return to_array(extend_from(ParabolaSet(make_ring(n)), to_vector(c)));
  }, py::arg("n"), py::arg("coeffs"));
  m.def("restrict", [](const ComplexArray& spectrum) {
    const auto s = to_grid<FrequencyDomain>(spectrum);
    return to_array(restrict_to(ParabolaSet(s.ring()), s));
  }, py::arg("spectrum"));

  m.def("verify_main_theorem", [](const ComplexArray& f) {
    const auto g = to_grid<SpaceDomain>(f);
    return report_dict(verify_main_theorem(g, ParabolaSet(g.ring())));
  }, py::arg("f"));
  m.def("evaluate_restriction", [](const ComplexArray& f, double s, double r, double constant) {
    const auto g = to_grid<SpaceDomain>(f);
    return report_dict(evaluate_restriction(g, ParabolaSet(g.ring()), FourierPlan(g.ring()),
                                            {s, r, constant}));
  }, py::arg("f"), py::arg("s") = 2.0, py::arg("r") = 4.0 / 3.0, py::arg("constant") = 1.0);
  m.def("verify_dual", [](std::int64_t n, const ComplexArray& c) {
    return report_dict(verify_dual(ParabolaSet(make_ring(n)), to_vector(c)));
  }, py::arg("n"), py::arg("coeffs"));
  m.def("verify_l1_l2", [](std::int64_t n, const ComplexArray& c) {
    return report_dict(verify_l1_l2(ParabolaSet(make_ring(n)), to_vector(c)));
  }, py::arg("n"), py::arg("coeffs"));
  m.def("main_theorem_constant", [](std::int64_t n) { return main_theorem_constant(make_ring(n)); },
        py::arg("n"));
  m.def("universal_certificate", [](std::int64_t n) {
    const auto c = universal_certificate(ParabolaSet(make_ring(n)));
    py::dict d;
    d["lambda_size"] = c.lambda_size;
    d["lambda_energy"] = c.lambda_energy;
    d["implied_constant"] = c.implied_constant;
    d["theorem_constant"] = c.theorem_constant;
    return d;
  }, py::arg("n"));

  m.def("uncertainty_search",
        [](std::int64_t n, std::size_t max_support, std::size_t exhaustive,
           std::uint64_t samples, std::uint64_t seed) {
          UncertaintyOptions options;
          options.exhaustive_max_size = exhaustive;
          options.random_samples = samples;
          options.seed = seed;
          UncertaintyVerdict v;
          {
            py::gil_scoped_release release;
            v = uncertainty_search(make_ring(n), max_support, options);
          }
          py::dict d;
          d["witness_found"] = v.witness_found;
          d["support"] = v.support;
          d["supports_checked"] = v.supports_checked;
          return d;
        },
        py::arg("n"), py::arg("max_support"), py::arg("exhaustive") = 0,
        py::arg("samples") = 0, py::arg("seed") = 0);

  m.def("sharpness_probe", [](std::int64_t n, std::size_t random_indicators, std::uint64_t seed) {
    SharpnessResult r;
    {
      py::gil_scoped_release release;
      r = sharpness_probe(make_ring(n), {random_indicators, seed});
    }
    py::dict d;
    d["best_ratio"] = r.best_ratio;
    d["best_ratio_six_fifths"] = r.best_ratio_six_fifths;
    d["witness_kind"] = r.witness.kind;
    d["witness_support"] = r.witness.support;
    d["evaluated"] = r.evaluated;
    return d;
  }, py::arg("n"), py::arg("random_indicators") = 200, py::arg("seed") = 0);

  m.def("recover",
        [](const ComplexArray& f,
           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& unobserved,
           const std::string& method, std::optional<std::vector<std::size_t>> support) {
          auto problem = erase(to_grid<SpaceDomain>(f), to_frequencies(unobserved));
          problem.support_hint = std::move(support);
          if (method == "logan") return result_dict(logan_recover(problem));
          if (method == "least-squares") return result_dict(least_squares_recover(problem));
          throw py::value_error("method must be 'logan' or 'least-squares'");
        },
        py::arg("f"), py::arg("unobserved"), py::arg("method") = "logan",
        py::arg("support") = py::none());

  m.def("threshold_sweep",
        [](std::int64_t n, const std::vector<std::size_t>& sizes, std::size_t trials,
           std::uint64_t seed, bool worst_case) {
          const auto ring = make_ring(n);
          const ParabolaSet sigma(ring);
          SweepOptions options;
          options.seed = seed;
          options.worst_case = worst_case;
          std::vector<SweepRow> rows;
          {
            py::gil_scoped_release release;
            rows = threshold_sweep(ring, sigma.points(), sizes, trials, options);
          }
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["N"] = r.modulus;
            d["S_size"] = r.unobserved_size;
            d["E_size"] = r.support_size;
            d["trials"] = r.trials;
            d["exact_rate"] = r.exact_rate;
            d["mean_iterations"] = r.mean_iterations;
            d["ds_threshold"] = r.ds_threshold;
            d["improved_threshold"] = r.improved_threshold;
            out.append(d);
          }
          return out;
        },
        py::arg("n"), py::arg("sizes"), py::arg("trials"), py::arg("seed") = 0,
        py::arg("worst_case") = false);

  m.def("thread_count", &thread_count);
  m.def("set_thread_count", &set_thread_count, py::arg("threads"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
