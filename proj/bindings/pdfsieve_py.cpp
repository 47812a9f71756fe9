#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <stdexcept>

#include "pdfsieve/analytics.hpp"
#include "pdfsieve/delta.hpp"
#include "pdfsieve/pairs.hpp"
#include "pdfsieve/realext.hpp"
#include "pdfsieve/sieve.hpp"

namespace py = pybind11;
using namespace pdfsieve;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Prime detecting sieve: indicator filters, detector products, pair "
            "counts, and density analytics.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<resource_error>(m, "ResourceError", PyExc_MemoryError);

  py::class_<SieveOptions>(m, "SieveOptions")
      .def(py::init<>())
      .def_readwrite("segment_size", &SieveOptions::segment_size)
      .def_readwrite("threads", &SieveOptions::threads)
      .def_readwrite("memory_budget_bytes", &SieveOptions::memory_budget_bytes);

  py::class_<Ratio>(m, "Ratio")
      .def_readonly("num", &Ratio::num)
      .def_readonly("den", &Ratio::den)
      .def("value", &Ratio::value)
      .def("__float__", &Ratio::value);

  py::class_<CollapsePair>(m, "CollapsePair")
      .def_readonly("lhs", &CollapsePair::lhs)
      .def_readonly("rhs", &CollapsePair::rhs);

  m.def("delta", py::overload_cast<i64, i64, i64>(&delta), py::arg("numerator"),
        py::arg("divisor"), py::arg("offset"),
        "1 iff divisor | numerator and numerator / divisor >= offset.");
  m.def("sieve_factor", &sieve_factor, py::arg("n"), py::arg("p"),
        "One detector bracket: 1 - delta(n, p, p).");
  m.def("collapse_check", &collapse_check, py::arg("n"), py::arg("small_primes"),
        py::arg("pivot"), "Both sides of the product-collapse identity.");
  m.def("empirical_delta_density", &empirical_delta_density, py::arg("q"), py::arg("s"),
        py::arg("r"), py::arg("n_limit"),
        "Fraction of 2 <= m <= n_limit with delta(m + s, q, r) = 1.");

  py::class_<PrimeBasis>(m, "PrimeBasis")
      .def(py::init<std::vector<u64>>(), py::arg("primes"))
      .def_static("first", &PrimeBasis::first, py::arg("k"))
      .def_static("up_to", &PrimeBasis::up_to, py::arg("limit"))
      .def("primes", &PrimeBasis::primes)
      .def("__len__", &PrimeBasis::size)
      .def("largest", &PrimeBasis::largest)
      .def("next_prime", &PrimeBasis::next_prime)
      .def("window_end", &PrimeBasis::window_end);

  m.def("pdf_eval", &pdf_eval, py::arg("n"), py::arg("basis"),
        "Detector product for n over the basis.");
  m.def("recurrence_run", &recurrence_run, py::arg("n_max"),
        "Self-charging scan over 2..n_max; returns the primes found.");

  py::class_<SieveBits>(m, "SieveBits")
      .def("n_max", &SieveBits::n_max)
      .def("is_prime", &SieveBits::is_prime, py::arg("n"))
      .def("count_up_to", &SieveBits::count_up_to, py::arg("n"))
      .def("primes", &SieveBits::to_primes)
      .def("save_bitmap",
           [](const SieveBits& bits, const std::string& path) {
             std::ofstream os(path, std::ios::binary);
             if (!os) throw std::runtime_error("cannot open " + path);
             bits.write_bitmap(os);
           },
           py::arg("path"))
      .def_static("load_bitmap", [](const std::string& path) {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw std::runtime_error("cannot open " + path);
        return SieveBits::read_bitmap(is);
      }, py::arg("path"));

  m.def("segmented_sieve", &segmented_sieve, py::arg("n_max"),
        py::arg("opts") = SieveOptions{}, "Primality bitmap for 0..n_max.");

  m.def("pi", py::overload_cast<const SieveBits&, u64>(&pi), py::arg("bits"), py::arg("n"));
  m.def("pi", py::overload_cast<u64, const SieveOptions&>(&pi), py::arg("n"),
        py::arg("opts") = SieveOptions{}, "Number of primes <= n.");
  m.def("pi_k", &pi_k, py::arg("n"), py::arg("k"),
        "Count of 2 <= m <= n passing the detector over the first k primes.");

  py::enum_<CountKind>(m, "CountKind")
      .value("pi", CountKind::pi)
      .value("pi_k", CountKind::pi_k)
      .value("twin", CountKind::twin)
      .value("pair", CountKind::pair);

  py::class_<CountSeries>(m, "CountSeries")
      .def_readonly("kind", &CountSeries::kind)
      .def_readonly("k", &CountSeries::k)
      .def_readonly("half_gap", &CountSeries::half_gap)
      .def_readonly("points", &CountSeries::points);

  m.def("count_series", &count_series, py::arg("kind"), py::arg("k"), py::arg("half_gap"),
        py::arg("checkpoints"), py::arg("opts") = SieveOptions{},
        "Counts at each checkpoint in a single pass.");

  m.def("twin_pdf_product", &twin_pdf_product, py::arg("n"), py::arg("basis"));
  m.def("twin_pdf_simplified", &twin_pdf_simplified, py::arg("n"), py::arg("basis"));
  m.def("pair_pdf_full", &pair_pdf_full, py::arg("n"), py::arg("half_gap"),
        "Exact pair detector: 1 iff n and n + 2*half_gap are both prime.");
  m.def("pi_twin", py::overload_cast<const SieveBits&, u64>(&pi_twin), py::arg("bits"),
        py::arg("n"));
  m.def("pi_twin", py::overload_cast<u64, const SieveOptions&>(&pi_twin), py::arg("n"),
        py::arg("opts") = SieveOptions{}, "Number of primes p <= n with p + 2 prime.");
  m.def("pi_twin_k", &pi_twin_k, py::arg("n"), py::arg("k"));
  m.def("pi_pair", py::overload_cast<const SieveBits&, u64, u64>(&pi_pair), py::arg("bits"),
        py::arg("n"), py::arg("half_gap"));
  m.def("pi_pair", py::overload_cast<u64, u64, const SieveOptions&>(&pi_pair), py::arg("n"),
        py::arg("half_gap"), py::arg("opts") = SieveOptions{},
        "Number of primes p <= n with p + 2*half_gap prime.");
  m.def("pair_count_series", &pair_count_series, py::arg("bits"), py::arg("checkpoints"),
        py::arg("half_gap"));

  m.def("theoretical_density",
        [](std::size_t k) { return static_cast<double>(theoretical_density(k)); },
        py::arg("k"), "prod (1 - 1/p) over the first k primes.");
  m.def("twin_theoretical_density",
        [](std::size_t k) { return static_cast<double>(twin_theoretical_density(k)); },
        py::arg("k"), "(1/2) prod (1 - 2/p) over odd primes among the first k.");
  m.def("ratio_target", [](std::size_t k) { return static_cast<double>(ratio_target(k)); },
        py::arg("k"), "Limit of ratio_empirical for the first k primes.");
  m.def("ratio_empirical", &ratio_empirical, py::arg("k"), py::arg("n"),
        "(pi_twin_k(n)/n) * (n/pi_k(n))^2.");
  m.def("twin_constant",
        [](u64 p_max, const SieveOptions& opts) {
          return static_cast<double>(twin_constant(p_max, opts));
        },
        py::arg("p_max"), py::arg("opts") = SieveOptions{},
        "prod (1 - 1/(p-1)^2) over odd primes p <= p_max.");
  m.def("singular_series",
        [](u64 half_gap) { return static_cast<double>(singular_series(half_gap)); },
        py::arg("half_gap"), "prod (p-1)/(p-2) over odd primes dividing half_gap.");
  m.def("li2", &li2, py::arg("x"), "Integral of dt/ln(t)^2 from 2 to x.");

  py::class_<DensityReport>(m, "DensityReport")
      .def_readonly("k", &DensityReport::k)
      .def_readonly("n", &DensityReport::n)
      .def_readonly("empirical", &DensityReport::empirical)
      .def_property_readonly("theoretical",
                             [](const DensityReport& r) {
                               return static_cast<double>(r.theoretical);
                             })
      .def("abs_error",
           [](const DensityReport& r) { return static_cast<double>(r.abs_error()); });

  m.def("density_report", &density_report, py::arg("k"), py::arg("n"));
  m.def("twin_density_report", &twin_density_report, py::arg("k"), py::arg("n"));

  py::class_<HLPrediction>(m, "HLPrediction")
      .def_readonly("half_gap", &HLPrediction::half_gap)
      .def_readonly("n", &HLPrediction::n)
      .def_readonly("c_twin", &HLPrediction::c_twin)
      .def_readonly("singular_factor", &HLPrediction::singular_factor)
      .def_readonly("li2_value", &HLPrediction::li2_value)
      .def_readonly("predicted", &HLPrediction::predicted)
      .def_readonly("actual", &HLPrediction::actual)
      .def_readonly("ratio", &HLPrediction::ratio);

  m.def("hl_prediction",
        [](u64 n, u64 half_gap, u64 c_twin_p_max, double c_twin) {
          HLOptions opts;
          opts.c_twin_p_max = c_twin_p_max;
          opts.c_twin = c_twin;
          return hl_prediction(n, half_gap, opts);
        },
        py::arg("n"), py::arg("half_gap") = 1, py::arg("c_twin_p_max") = 100000000,
        py::arg("c_twin") = 0.0,
        "Predicted vs actual count of pairs (p, p + 2*half_gap) up to n.");

  m.def("brun_partial", py::overload_cast<u64, const SieveOptions&>(&brun_partial),
        py::arg("n"), py::arg("opts") = SieveOptions{},
        "Sum of 1/p + 1/(p+2) over twin pairs with p <= n.");
  m.def("brun_upper_bound", &brun_upper_bound, py::arg("n"), py::arg("c_twin"));
  m.def("pnt_ratio", py::overload_cast<u64, const SieveOptions&>(&pnt_ratio), py::arg("n"),
        py::arg("opts") = SieveOptions{}, "pi(n) * ln(n) / n.");

  py::class_<InterpolatedPi>(m, "InterpolatedPi")
      .def(py::init<u64, const SieveOptions&>(), py::arg("n_max"),
           py::arg("opts") = SieveOptions{})
      .def("n_max", &InterpolatedPi::n_max)
      .def("pi_int", &InterpolatedPi::pi_int, py::arg("n"))
      .def("pdf_real", &InterpolatedPi::pdf_real, py::arg("x"),
           "Detector bit of ceil(x).")
      .def("pi_hat", &InterpolatedPi::pi_hat, py::arg("x"),
           "Piecewise-linear interpolation of the counting function.")
      .def("left_derivative_check", &InterpolatedPi::left_derivative_check, py::arg("x"),
           py::arg("h_min"), "(slope of the active piece, detector bit at x).")
      .def("integrate_pdf_real", &InterpolatedPi::integrate_pdf_real, py::arg("x"),
           "Integral of the real detector over (2, x] plus the unit mass at 2.");

  py::class_<SpikeTrain>(m, "SpikeTrain")
      .def(py::init<std::vector<u64>>(), py::arg("locations"))
      .def_static("build", &SpikeTrain::build, py::arg("n_max"),
                  py::arg("opts") = SieveOptions{})
      .def_readonly("locations", &SpikeTrain::locations);

  m.def("step_pi_from_spikes", &step_pi_from_spikes, py::arg("x"), py::arg("train"),
        "Number of spikes at or below x.");
}
