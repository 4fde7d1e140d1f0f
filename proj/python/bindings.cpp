// irssec - secrecy optimization for IRS-assisted UAV links
// Copyright (C) 2026 The irssec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irssec/config.hpp"
#include "irssec/montecarlo.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace irssec;

namespace
{
    std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Secrecy capacity of IRS-assisted UAV links";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<StreamPurpose>(m, "StreamPurpose")
        .value("channel", StreamPurpose::channel)
        .value("phase_init", StreamPurpose::phase_init)
        .value("instance", StreamPurpose::instance);

    py::class_<Rng>(m, "Rng", "Seeded 64-bit Mersenne Twister stream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("__call__", [](Rng &r) { return r(); });
    m.def("derive_stream", &derive_stream, py::arg("master_seed"), py::arg("trial_index"), py::arg("purpose"));

    py::class_<Position3D>(m, "Position3D")
        .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("x", &Position3D::x)
        .def_readwrite("y", &Position3D::y)
        .def_readwrite("z", &Position3D::z)
        .def(py::self == py::self)
        .def("__repr__", [](const Position3D &p) {
            return "Position3D(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
        });
    m.def("distance", &distance);

    py::class_<Topology>(m, "Topology")
        .def(py::init<>())
        .def_readwrite("uav", &Topology::uav)
        .def_readwrite("irs", &Topology::irs)
        .def_readwrite("user", &Topology::user)
        .def_readwrite("eves", &Topology::eves)
        .def_readwrite("randomize_eves", &Topology::randomize_eves)
        .def_readwrite("eve_x_min", &Topology::eve_x_min)
        .def_readwrite("eve_x_max", &Topology::eve_x_max)
        .def_readwrite("eve_road_y", &Topology::eve_road_y)
        .def("validate", &Topology::validate);

    py::class_<FadingParams>(m, "FadingParams")
        .def(py::init<>())
        .def_readwrite("pathloss_exponent", &FadingParams::pathloss_exponent)
        .def_readwrite("noise_variance", &FadingParams::noise_variance)
        .def_readwrite("reference_gain", &FadingParams::reference_gain)
        .def("validate", &FadingParams::validate);

    py::class_<ChannelRealization>(m, "ChannelRealization")
        .def(py::init<>())
        .def_readwrite("h_du", &ChannelRealization::h_du)
        .def_readwrite("h_de", &ChannelRealization::h_de)
        .def_readwrite("g_ui", &ChannelRealization::g_ui)
        .def_readwrite("g_iu", &ChannelRealization::g_iu)
        .def_readwrite("g_ie", &ChannelRealization::g_ie)
        .def_property_readonly("num_elements", &ChannelRealization::num_elements)
        .def_property_readonly("num_eves", &ChannelRealization::num_eves)
        .def("without_irs", &ChannelRealization::without_irs)
        .def("validate", &ChannelRealization::validate);

    m.def("path_loss", &path_loss, py::arg("a"), py::arg("b"), py::arg("params"));
    m.def("draw_cn01", &draw_cn01, py::arg("rng"));
    m.def("place_eves", &place_eves, py::arg("topology"), py::arg("k_eves"), py::arg("rng"));
    m.def("draw_realization", &draw_realization, py::arg("topology"), py::arg("params"), py::arg("m_elements"),
          py::arg("rng"));
    m.def("draw_unit_realization", &draw_unit_realization, py::arg("m_elements"), py::arg("k_eves"), py::arg("rng"));

    py::class_<PhaseProfile>(m, "PhaseProfile")
        .def(py::init<>())
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("amplitudes"), py::arg("phases"))
        .def_static("from_phases", &PhaseProfile::from_phases, py::arg("phases"))
        .def_static("uniform", &PhaseProfile::uniform, py::arg("m"))
        .def_static("disabled", &PhaseProfile::disabled, py::arg("m"))
        .def_static("random", &PhaseProfile::random, py::arg("m"), py::arg("rng"))
        .def_property_readonly("amplitudes", [](const PhaseProfile &p) { return to_vec(p.amplitudes()); })
        .def_property_readonly("phases", [](const PhaseProfile &p) { return to_vec(p.phases()); })
        .def("set_phase", &PhaseProfile::set_phase)
        .def("set_amplitude", &PhaseProfile::set_amplitude)
        .def("__len__", &PhaseProfile::size)
        .def(py::self == py::self);

    m.def("wrap_phase", &wrap_phase);
    m.def(
        "effective_channel",
        [](cplx direct, const CVec &incident, const CVec &outgoing, const PhaseProfile &profile) {
            return effective_channel(direct, incident, outgoing, profile);
        },
        py::arg("direct"), py::arg("incident"), py::arg("outgoing"), py::arg("profile"));
    m.def(
        "cascade_coefficients",
        [](const ChannelRealization &r, std::optional<std::size_t> eve) { return cascade_coefficients(r, eve); },
        py::arg("realization"), py::arg("eve") = py::none(), "Cascaded gains to the user (eve=None) or an eve");

    py::class_<SecrecyOutcome>(m, "SecrecyOutcome")
        .def_readonly("power", &SecrecyOutcome::power)
        .def_readonly("profile", &SecrecyOutcome::profile)
        .def_readonly("rate_user", &SecrecyOutcome::rate_user)
        .def_readonly("rate_eves", &SecrecyOutcome::rate_eves)
        .def_readonly("secrecy_capacity", &SecrecyOutcome::secrecy_capacity)
        .def_readonly("active_eve", &SecrecyOutcome::active_eve)
        .def_property_readonly("max_eve_rate", &SecrecyOutcome::max_eve_rate);

    m.def("rate", &rate, py::arg("h_eff"), py::arg("power"), py::arg("noise_variance"));
    m.def("secrecy_capacity",
          py::overload_cast<const ChannelRealization &, const PhaseProfile &, double, const FadingParams &>(
              &secrecy_capacity),
          py::arg("realization"), py::arg("profile"), py::arg("power"), py::arg("params"));

    py::class_<OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("max_outer_iters", &OptimizerConfig::max_outer_iters)
        .def_readwrite("max_inner_iters", &OptimizerConfig::max_inner_iters)
        .def_readwrite("step_size", &OptimizerConfig::step_size)
        .def_readwrite("backtrack_factor", &OptimizerConfig::backtrack_factor)
        .def_readwrite("restarts", &OptimizerConfig::restarts)
        .def_readwrite("tol", &OptimizerConfig::tol)
        .def_readwrite("power_max", &OptimizerConfig::power_max)
        .def_readwrite("optimize_amplitudes", &OptimizerConfig::optimize_amplitudes)
        .def_readwrite("smoothing_temperature", &OptimizerConfig::smoothing_temperature)
        .def("validate", &OptimizerConfig::validate);

    py::class_<OptimizationTrace>(m, "OptimizationTrace")
        .def_readonly("objective_per_iter", &OptimizationTrace::objective_per_iter)
        .def_readonly("restart_of_iter", &OptimizationTrace::restart_of_iter)
        .def_readonly("final", &OptimizationTrace::final)
        .def_readonly("restarts_tried", &OptimizationTrace::restarts_tried)
        .def_readonly("converged", &OptimizationTrace::converged);

    m.def("optimal_power", &optimal_power, py::arg("user_gain"), py::arg("best_eve_gain"), py::arg("power_max"));
    m.def("evaluate_with_optimal_power", &evaluate_with_optimal_power, py::arg("realization"), py::arg("profile"),
          py::arg("params"), py::arg("power_max"));
    m.def("phase_gradient",
          py::overload_cast<const ChannelRealization &, const PhaseProfile &, double, const FadingParams &, double>(
              &phase_gradient),
          py::arg("realization"), py::arg("profile"), py::arg("power"), py::arg("params"),
          py::arg("temperature") = 0.0);
    m.def("optimize_phases", &optimize_phases, py::arg("realization"), py::arg("init"), py::arg("power"),
          py::arg("params"), py::arg("config") = OptimizerConfig{});
    m.def(
        "alternate_optimize",
        [](const ChannelRealization &r, const FadingParams &params, const OptimizerConfig &cfg, Rng &rng,
           const std::vector<PhaseProfile> &warm_starts) { return alternate_optimize(r, params, cfg, rng, warm_starts); },
        py::arg("realization"), py::arg("params"), py::arg("config"), py::arg("rng"),
        py::arg("warm_starts") = std::vector<PhaseProfile>{});
    m.def("oracle_grid_search", &oracle_grid_search, py::arg("realization"), py::arg("params"), py::arg("power_max"),
          py::arg("levels"));

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("topology", &ScenarioConfig::topology)
        .def_readwrite("fading", &ScenarioConfig::fading)
        .def_readwrite("m_elements", &ScenarioConfig::m_elements)
        .def_readwrite("k_eves", &ScenarioConfig::k_eves)
        .def_readwrite("power_max", &ScenarioConfig::power_max)
        .def_readwrite("optimizer", &ScenarioConfig::optimizer)
        .def_readwrite("master_seed", &ScenarioConfig::master_seed)
        .def_readwrite("trials", &ScenarioConfig::trials)
        .def("solver", &ScenarioConfig::solver)
        .def("validate", &ScenarioConfig::validate);
    m.def("parse_config", &parse_config, py::arg("text"), py::arg("base") = ScenarioConfig{});
    m.def("load_config", &load_config, py::arg("path"), py::arg("base") = ScenarioConfig{});
    m.def("dump_config", &dump_config, py::arg("config"));

    py::enum_<Baseline>(m, "Baseline")
        .value("optimized_irs", Baseline::optimized_irs)
        .value("no_irs", Baseline::no_irs)
        .value("random_phase", Baseline::random_phase);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("trial_index", &TrialResult::trial_index)
        .def_readonly("baselines", &TrialResult::baselines)
        .def_readonly("outcomes", &TrialResult::outcomes)
        .def_readonly("trace", &TrialResult::trace)
        .def("at", &TrialResult::at, py::return_value_policy::copy);

    m.def("run_trial", &run_trial, py::arg("config"), py::arg("trial_index"), py::arg("baselines") = all_baselines,
          py::arg("keep_trace") = false);
    m.def("run_trials", &run_trials, py::arg("config"), py::arg("baselines") = all_baselines, py::arg("jobs") = 1,
          py::arg("keep_trace") = false, py::call_guard<py::gil_scoped_release>());

    py::enum_<SweptParameter>(m, "SweptParameter")
        .value("power_max", SweptParameter::power_max)
        .value("m_elements", SweptParameter::m_elements);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("swept", &SweepSpec::swept)
        .def_readwrite("values", &SweepSpec::values)
        .def_readwrite("trials", &SweepSpec::trials)
        .def_readwrite("baselines", &SweepSpec::baselines)
        .def("validate", &SweepSpec::validate);

    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("stderr", &SummaryStats::stderr_mean)
        .def_readonly("trials", &SummaryStats::trials)
        .def_readonly("zero_fraction", &SummaryStats::zero_fraction);
    m.def("summarize", &summarize, py::arg("samples"));

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("swept_value", &SweepRow::swept_value)
        .def_readonly("baseline", &SweepRow::baseline)
        .def_readonly("stats", &SweepRow::stats);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("swept", &SweepResult::swept)
        .def_readonly("values", &SweepResult::values)
        .def_readonly("baselines", &SweepResult::baselines)
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("samples", &SweepResult::samples)
        .def("row", &SweepResult::row, py::return_value_policy::copy)
        .def("trial_values", &SweepResult::trial_values, py::return_value_policy::copy);
    m.def("run_sweep", &run_sweep, py::arg("config"), py::arg("spec"), py::arg("jobs") = 1,
          py::call_guard<py::gil_scoped_release>());

    py::class_<OracleCheckRow>(m, "OracleCheckRow")
        .def_readonly("instance", &OracleCheckRow::instance)
        .def_readonly("achieved", &OracleCheckRow::achieved)
        .def_readonly("oracle", &OracleCheckRow::oracle)
        .def_readonly("ratio", &OracleCheckRow::ratio)
        .def_readonly("passed", &OracleCheckRow::pass);
    py::class_<OracleCheckReport>(m, "OracleCheckReport")
        .def_readonly("rows", &OracleCheckReport::rows)
        .def_readonly("pass_fraction", &OracleCheckReport::pass_fraction)
        .def_readonly("threshold", &OracleCheckReport::threshold);
    m.def("run_oracle_check", &run_oracle_check, py::arg("instances"), py::arg("m"), py::arg("k"), py::arg("levels"),
          py::arg("seed"), py::arg("fading") = FadingParams{}, py::arg("config") = OptimizerConfig{},
          py::arg("jobs") = 1, py::arg("threshold") = 0.98, py::call_guard<py::gil_scoped_release>());
}
