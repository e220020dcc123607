#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "homsim/assembly.hpp"
#include "homsim/exact.hpp"
#include "homsim/oracle.hpp"
#include "homsim/report.hpp"

namespace py = pybind11;
using namespace homsim;

namespace {

Event to_event(std::pair<int, int> mn) { return Event{mn.first, mn.second}; }

std::pair<int, int> from_event(Event e) { return {e.m, e.n}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact event statistics of partially distinguishable photons "
              "interfering at a two-mode coupler";

    m.attr("SPEED_OF_LIGHT") = speed_of_light;
    m.attr("MAX_PHOTONS_PER_MODE") = max_photons_per_mode;

    // spectral
    py::class_<OverlapModel>(m, "OverlapModel")
        .def(py::init<double, double>(), py::arg("sigma_omega"), py::arg("center_omega") = 0.0)
        .def_readonly("sigma_omega", &OverlapModel::sigma_omega)
        .def_readonly("center_omega", &OverlapModel::center_omega);
    m.def("overlap_from_delay", &overlap_from_delay, py::arg("model"), py::arg("delay_m"));
    m.def("delay_from_overlap", &delay_from_overlap, py::arg("model"), py::arg("alpha_sq"));
    m.def("sigma_from_filter", &sigma_from_filter, py::arg("fwhm_wavelength_m"),
          py::arg("center_wavelength_m"));

    // scattering
    py::class_<CouplerSpec>(m, "CouplerSpec")
        .def(py::init<double>(), py::arg("transmission") = 0.70710678118654752440)
        .def_readonly("transmission", &CouplerSpec::transmission)
        .def("reflection", &CouplerSpec::reflection)
        .def("is_balanced", &CouplerSpec::is_balanced);
    py::class_<Species>(m, "Species")
        .def(py::init<int, int>(), py::arg("a_count"), py::arg("b_count"))
        .def_readonly("a_count", &Species::a_count)
        .def_readonly("b_count", &Species::b_count)
        .def("total", &Species::total);
    py::class_<EventDistribution>(m, "EventDistribution")
        .def_property_readonly("total", &EventDistribution::total)
        .def("prob", &EventDistribution::prob, py::arg("m"), py::arg("n"))
        .def_property_readonly("probs_by_m", [](const EventDistribution& d) {
            return std::vector<double>(d.probs_by_m().begin(), d.probs_by_m().end());
        });
    m.def("species_distribution", &species_distribution, py::arg("species"), py::arg("coupler"));
    m.def(
        "convolve",
        [](const std::vector<EventDistribution>& dists) {
            return convolve(std::span(dists));
        },
        py::arg("distributions"));
    m.def("detection_table", &detection_table, py::arg("photons_per_mode"), py::arg("coupler"));
    m.def(
        "detection_table_exact",
        [](int photons_per_mode) {
            std::vector<std::vector<std::string>> out;
            for (const auto& row : detection_table_exact(photons_per_mode)) {
                std::vector<std::string> srow;
                srow.reserve(row.size());
                for (const auto& f : row) srow.push_back(to_string(f));
                out.push_back(std::move(srow));
            }
            return out;
        },
        py::arg("photons_per_mode"),
        "Balanced-coupler detection probabilities as fraction strings, [j][m]");

    // decomposition
    py::enum_<TypeLabel>(m, "TypeLabel")
        .value("indis", TypeLabel::indis)
        .value("inter", TypeLabel::inter)
        .value("dist", TypeLabel::dist);
    py::class_<ComponentTerm>(m, "ComponentTerm")
        .def_readonly("j", &ComponentTerm::j)
        .def_readonly("weight", &ComponentTerm::weight)
        .def_readonly("label", &ComponentTerm::label)
        .def_readonly("species", &ComponentTerm::species);
    m.def(
        "decompose",
        [](int photons_per_mode, double alpha) {
            return decompose(InputSpec{photons_per_mode, alpha});
        },
        py::arg("photons_per_mode"), py::arg("alpha"));

    // assembly
    m.def(
        "all_events",
        [](int k) {
            std::vector<std::pair<int, int>> out;
            for (Event e : all_events(k)) out.push_back(from_event(e));
            return out;
        },
        py::arg("photons_per_mode"));
    m.def(
        "event_probability",
        [](int k, double alpha, std::pair<int, int> event, const CouplerSpec& coupler) {
            return event_probability(k, alpha, to_event(event), coupler);
        },
        py::arg("photons_per_mode"), py::arg("alpha"), py::arg("event"),
        py::arg("coupler") = CouplerSpec{});
    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("x", &ScanRow::x)
        .def_readonly("alpha_sq", &ScanRow::alpha_sq)
        .def_readonly("weights_per_j", &ScanRow::weights_per_j)
        .def_readonly("w_indis", &ScanRow::w_indis)
        .def_readonly("w_inter", &ScanRow::w_inter)
        .def_readonly("w_dist", &ScanRow::w_dist)
        .def_readonly("event_probs", &ScanRow::event_probs);
    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("photons_per_mode", &ScanResult::photons_per_mode)
        .def_property_readonly("events",
                               [](const ScanResult& r) {
                                   std::vector<std::pair<int, int>> out;
                                   for (Event e : r.events) out.push_back(from_event(e));
                                   return out;
                               })
        .def_readonly("rows", &ScanResult::rows)
        .def("to_csv",
             [](const ScanResult& r) {
                 std::ostringstream os;
                 write_csv(os, r);
                 return os.str();
             })
        .def("to_json", [](const ScanResult& r) { return to_json_string(r); });
    m.def(
        "scan",
        [](int k, const OverlapModel& model, const std::vector<double>& delays_m,
           const std::vector<std::pair<int, int>>& events, const CouplerSpec& coupler) {
            std::vector<Event> evs;
            evs.reserve(events.size());
            for (auto mn : events) evs.push_back(to_event(mn));
            return scan(k, model, delays_m, evs, coupler);
        },
        py::arg("photons_per_mode"), py::arg("model"), py::arg("delays_m"), py::arg("events"),
        py::arg("coupler") = CouplerSpec{});

    py::enum_<Monotonicity>(m, "Monotonicity")
        .value("monotonic", Monotonicity::monotonic)
        .value("non_monotonic", Monotonicity::non_monotonic)
        .value("flat", Monotonicity::flat);
    py::class_<Extremum>(m, "Extremum")
        .def_readonly("u", &Extremum::u)
        .def_readonly("p", &Extremum::p)
        .def_readonly("is_minimum", &Extremum::is_minimum)
        .def_readonly("delay_m", &Extremum::delay_m);
    py::class_<ExtremumReport>(m, "ExtremumReport")
        .def_property_readonly(
            "event", [](const ExtremumReport& r) { return from_event(r.event); })
        .def_readonly("classification", &ExtremumReport::classification)
        .def_readonly("interior", &ExtremumReport::interior)
        .def_readonly("p_zero_delay", &ExtremumReport::p_zero_delay)
        .def_readonly("p_infinity", &ExtremumReport::p_infinity);
    m.def(
        "find_extrema",
        [](int k, std::pair<int, int> event, const CouplerSpec& coupler, int grid_points,
           const std::optional<OverlapModel>& model) {
            return find_extrema(k, to_event(event), coupler, grid_points, model);
        },
        py::arg("photons_per_mode"), py::arg("event"), py::arg("coupler") = CouplerSpec{},
        py::arg("grid_points") = 1025, py::arg("model") = std::nullopt);

    // oracle
    m.def(
        "oracle_event_probability",
        [](int k, double alpha, std::pair<int, int> event, const CouplerSpec& coupler) {
            return oracle_event_probability(k, alpha, to_event(event), coupler);
        },
        py::arg("photons_per_mode"), py::arg("alpha"), py::arg("event"),
        py::arg("coupler") = CouplerSpec{});

    // figure pack
    m.def(
        "emit_figure_pack",
        [](const std::vector<int>& ks, const OverlapModel& model,
           const std::vector<double>& delays_m, const CouplerSpec& coupler,
           const std::filesystem::path& out_dir) {
            return emit_figure_pack(ks, model, delays_m, coupler, out_dir);
        },
        py::arg("photons_per_mode_list"), py::arg("model"), py::arg("delays_m"),
        py::arg("coupler"), py::arg("out_dir"));
    m.def("linspace", &linspace, py::arg("lo"), py::arg("hi"), py::arg("steps"));
}
