#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quench/distribution.hpp"
#include "quench/echo.hpp"
#include "quench/ising.hpp"
#include "quench/moments.hpp"
#include "quench/oracle.hpp"
#include "quench/sampling.hpp"
#include "quench/spectral.hpp"
#include "quench/thermo.hpp"

namespace py = pybind11;
using namespace quench;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Loschmidt-echo statistics of the quenched transverse-field Ising chain";

  py::class_<QuenchSpec>(m, "QuenchSpec")
      .def(py::init<double, double, int>(), py::arg("h1"), py::arg("h2"), py::arg("L"))
      .def_readwrite("h1", &QuenchSpec::h1)
      .def_readwrite("h2", &QuenchSpec::h2)
      .def_readwrite("L", &QuenchSpec::L)
      .def("__repr__", [](const QuenchSpec& s) {
        return "QuenchSpec(h1=" + std::to_string(s.h1) + ", h2=" + std::to_string(s.h2) +
               ", L=" + std::to_string(s.L) + ")";
      });

  py::class_<ModeData>(m, "ModeData")
      .def_readonly("ks", &ModeData::ks)
      .def_readonly("theta1", &ModeData::theta1)
      .def_readonly("theta2", &ModeData::theta2)
      .def_readonly("dtheta", &ModeData::dtheta)
      .def_readonly("lambda2", &ModeData::lambda2)
      .def_readonly("alpha", &ModeData::alpha)
      .def_readonly("L", &ModeData::L);

  py::class_<BandEdges>(m, "BandEdges")
      .def_readonly("E_m", &BandEdges::E_m)
      .def_readonly("E_M", &BandEdges::E_M);

  m.def("mode_grid", &mode_grid, py::arg("L"));
  m.def("bogoliubov_angle", &bogoliubov_angle, py::arg("h"), py::arg("k"));
  m.def("dispersion", &dispersion, py::arg("h"), py::arg("k"));
  m.def("band_edges", &band_edges, py::arg("h"));
  m.def("mode_data", &mode_data, py::arg("spec"));

  m.def("loschmidt_log", &loschmidt_log, py::arg("md"), py::arg("t"));
  m.def(
      "loschmidt",
      [](const ModeData& md, double t) { return loschmidt(md, t); },
      py::arg("md"), py::arg("t"));
  m.def("magnetization", &magnetization, py::arg("spec"), py::arg("t"));
  m.def("energy_variance", &energy_variance, py::arg("md"));
  m.def("short_time_gaussian", &short_time_gaussian, py::arg("md"), py::arg("t"));
  m.def("relaxation_time", &relaxation_time, py::arg("md"));

  m.def("mean_echo_log", &mean_echo_log, py::arg("md"));
  m.def("g0_coefficient", &g0_coefficient, py::arg("n"), py::arg("alpha"));
  m.def("exact_moment_log", &exact_moment_log, py::arg("md"), py::arg("n"));
  m.def("exact_variance", &exact_variance, py::arg("md"));
  m.def("derangement_count", &derangement_count, py::arg("k"));
  m.def("weight_power_sum", &weight_power_sum, py::arg("md"), py::arg("m"));
  py::class_<NonresonantMoments>(m, "NonresonantMoments")
      .def_readonly("mu2", &NonresonantMoments::mu2)
      .def_readonly("mu3", &NonresonantMoments::mu3)
      .def_readonly("variance_nr", &NonresonantMoments::variance_nr);
  m.def("nonresonant_moments", &nonresonant_moments, py::arg("md"));
  m.def("nonresonant_moment", &nonresonant_moment, py::arg("md"), py::arg("n"));
  py::class_<MomentBoundReport>(m, "MomentBoundReport")
      .def_readonly("holds", &MomentBoundReport::holds)
      .def_readonly("margins", &MomentBoundReport::margins);
  m.def("moment_bound_check", &moment_bound_check, py::arg("md"), py::arg("n_max"));

  py::class_<SpectralAtom>(m, "SpectralAtom")
      .def_readonly("omega", &SpectralAtom::omega)
      .def_readonly("weight", &SpectralAtom::weight);
  py::class_<SpectralMeasure>(m, "SpectralMeasure")
      .def_readonly("atoms", &SpectralMeasure::atoms)
      .def_readonly("merge_tol", &SpectralMeasure::merge_tol)
      .def_readonly("prune_tol", &SpectralMeasure::prune_tol)
      .def_readonly("discarded_mass", &SpectralMeasure::discarded_mass);
  m.def(
      "spectral_measure",
      [](const ModeData& md, double merge_tol, double prune_tol) {
        if (merge_tol < 0.0) merge_tol = default_merge_tol(md);
        return spectral_measure(md, merge_tol, prune_tol);
      },
      py::arg("md"), py::arg("merge_tol") = -1.0, py::arg("prune_tol") = kDefaultPruneTol);
  m.def("reconstruct", &reconstruct, py::arg("measure"), py::arg("t"));
  m.def("one_particle_amplitude", &one_particle_amplitude, py::arg("md"));
  m.def("first_order_echo", &first_order_echo, py::arg("md"), py::arg("t"),
        py::arg("refined") = false);
  py::class_<GapScales>(m, "GapScales")
      .def_readonly("delta10", &GapScales::delta10)
      .def_readonly("delta11", &GapScales::delta11);
  m.def("gap_scales", &gap_scales, py::arg("md"));
  m.def("revival_time", &revival_time, py::arg("measure"));

  m.def("sample_echo", &sample_echo, py::arg("md"), py::arg("T"), py::arg("N"),
        py::arg("seed"));
  m.def(
      "histogram",
      [](const std::vector<double>& samples, int bins) {
        return histogram(samples, bins);
      },
      py::arg("samples"), py::arg("bins"));
  py::class_<EmpiricalDistribution>(m, "EmpiricalDistribution")
      .def_readonly("bin_edges", &EmpiricalDistribution::bin_edges)
      .def_readonly("counts", &EmpiricalDistribution::counts)
      .def_readonly("n_samples", &EmpiricalDistribution::n_samples);
  py::class_<BatmanParams>(m, "BatmanParams")
      .def(py::init([](double mean, double A, double B, double omega_A, double omega_B) {
             return BatmanParams{mean, A, B, omega_A, omega_B};
           }),
           py::arg("mean"), py::arg("A"), py::arg("B"), py::arg("omega_A") = 0.0,
           py::arg("omega_B") = 0.0)
      .def_readonly("mean", &BatmanParams::mean)
      .def_readonly("A", &BatmanParams::A)
      .def_readonly("B", &BatmanParams::B)
      .def_readonly("omega_A", &BatmanParams::omega_A)
      .def_readonly("omega_B", &BatmanParams::omega_B);
  m.def(
      "batman_density",
      [](const BatmanParams& p, double x) { return batman_density(p, x); },
      py::arg("params"), py::arg("x"));
  m.def("batman_params", &batman_params, py::arg("measure"), py::arg("mean_log"));
  m.def("exponential_density", &exponential_density, py::arg("mean_log"), py::arg("x"));
  m.def("exponential_density_eps", &exponential_density_eps, py::arg("mean_log"),
        py::arg("eps"), py::arg("x"));
  m.def("gaussian_density", &gaussian_density, py::arg("mean"), py::arg("variance"),
        py::arg("x"));
  py::enum_<Regime>(m, "Regime")
      .value("Degenerate", Regime::Degenerate)
      .value("Exponential", Regime::Exponential)
      .value("Gaussian", Regime::Gaussian)
      .value("BatmanHood", Regime::BatmanHood);
  py::class_<RegimeThresholds>(m, "RegimeThresholds")
      .def(py::init<>())
      .def_readwrite("delta_small", &RegimeThresholds::delta_small)
      .def_readwrite("c_qc", &RegimeThresholds::c_qc)
      .def_readwrite("c_exp", &RegimeThresholds::c_exp);
  m.def("classify_regime", &classify_regime, py::arg("spec"),
        py::arg("thresholds") = RegimeThresholds{});
  m.def("distribution_distance", &distribution_distance, py::arg("empirical"),
        py::arg("density"));

  py::class_<ThermoAsymptotics>(m, "ThermoAsymptotics")
      .def_readonly("E_m", &ThermoAsymptotics::E_m)
      .def_readonly("E_M", &ThermoAsymptotics::E_M)
      .def_readonly("s_inf", &ThermoAsymptotics::s_inf)
      .def_readonly("g", &ThermoAsymptotics::g)
      .def_readonly("A_m", &ThermoAsymptotics::A_m)
      .def_readonly("A_M", &ThermoAsymptotics::A_M);
  m.def("s_of_t", &s_of_t, py::arg("h1"), py::arg("h2"), py::arg("t"),
        py::arg("abs_tol") = 1e-10);
  m.def("s_infinity", &s_infinity, py::arg("h1"), py::arg("h2"));
  m.def("g_rate", &g_rate, py::arg("h1"), py::arg("h2"));
  m.def("thermo_asymptotics", &thermo_asymptotics, py::arg("h1"), py::arg("h2"));
  m.def(
      "asymptotic_s",
      [](double h1, double h2, double t) { return asymptotic_s(h1, h2, t); },
      py::arg("h1"), py::arg("h2"), py::arg("t"));
  m.def("density_of_states", &density_of_states, py::arg("h2"), py::arg("omega"));
  py::class_<AlphaOmega>(m, "AlphaOmega")
      .def_readonly("value", &AlphaOmega::value)
      .def_readonly("rational_form", &AlphaOmega::rational_form)
      .def_readonly("rel_deviation", &AlphaOmega::rel_deviation);
  m.def("alpha_of_omega", &alpha_of_omega, py::arg("h1"), py::arg("h2"), py::arg("omega"));
  py::class_<SeriesIdentity>(m, "SeriesIdentity")
      .def_readonly("lhs", &SeriesIdentity::lhs)
      .def_readonly("rhs", &SeriesIdentity::rhs);
  m.def("series_identity_check", &series_identity_check, py::arg("x"));
  py::class_<LimitOrderComparison>(m, "LimitOrderComparison")
      .def_readonly("time_average_first", &LimitOrderComparison::time_average_first)
      .def_readonly("thermo_first", &LimitOrderComparison::thermo_first);
  m.def("limit_order_compare", &limit_order_compare, py::arg("h1"), py::arg("h2"),
        py::arg("L"));

  py::class_<StateEnsemble>(m, "StateEnsemble")
      .def_readonly("weights", &StateEnsemble::weights)
      .def_readonly("energies", &StateEnsemble::energies)
      .def_readonly("L", &StateEnsemble::L);
  m.def("enumerate_states", &enumerate_states, py::arg("md"));
  m.def("brute_echo", &brute_echo, py::arg("ensemble"), py::arg("t"));
  m.def("power_sum", &power_sum, py::arg("ensemble"), py::arg("m"));
  py::class_<TimeAverage>(m, "TimeAverage")
      .def_readonly("mean", &TimeAverage::mean)
      .def_readonly("std_error", &TimeAverage::std_error);
  m.def("time_average_estimate", &time_average_estimate, py::arg("f"), py::arg("T"),
        py::arg("N"), py::arg("seed"));
  m.def("low_discrepancy_times", &low_discrepancy_times, py::arg("T"), py::arg("N"),
        py::arg("seed"));

  py::register_exception<NoDynamicsError>(m, "NoDynamicsError", PyExc_ValueError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);
}
