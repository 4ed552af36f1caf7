#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamcube/fixtures.hpp"
#include "hamcube/graycode.hpp"
#include "hamcube/markov.hpp"
#include "hamcube/metric.hpp"
#include "hamcube/prng.hpp"
#include "hamcube/stats.hpp"
#include "hamcube/stoptime.hpp"

namespace py = pybind11;
using namespace hamcube;

namespace {

TransitionSequence make_sequence(int n_bits, std::vector<int> seq) {
    TransitionSequence s{n_bits, std::move(seq)};
    validate(s);
    return s;
}

py::dict report_to_dict(const TestReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["statistic"] = r.statistic;
    d["p_value"] = r.p_value;
    d["pass"] = r.pass;
    return d;
}

} // namespace

PYBIND11_MODULE(_hamcube, m) {
    m.doc() = "balanced Gray codes, cube walks, Markov analysis and seeded bit streams";

    py::class_<TransitionSequence>(m, "TransitionSequence")
        .def(py::init(&make_sequence), py::arg("n_bits"), py::arg("seq"))
        .def_readonly("n_bits", &TransitionSequence::n_bits)
        .def_readonly("seq", &TransitionSequence::seq)
        .def("__len__", [](const TransitionSequence& s) { return s.seq.size(); });

    m.def("build_balanced_code", &build_balanced_code, py::arg("n"), py::arg("seed"));
    m.def("transition_counts", &transition_counts);
    m.def("is_cyclic_gray", &is_cyclic_gray);
    m.def("balance_class",
          [](const TransitionSequence& s) { return std::string(to_string(balance_class(s))); });
    m.def("codewords", &codewords);

    py::class_<BooleanMap>(m, "BooleanMap")
        .def(py::init<int, std::vector<Word>>(), py::arg("n_bits"), py::arg("images"))
        .def_static("with_derived_h", &BooleanMap::with_derived_h)
        .def_static("negation", &BooleanMap::negation)
        .def_property_readonly("n_bits", &BooleanMap::n_bits)
        .def_property_readonly("images", &BooleanMap::images)
        .def("has_h", &BooleanMap::has_h)
        .def("h", &BooleanMap::h)
        .def("image", &BooleanMap::image)
        .def("table_line", &BooleanMap::table_line);

    m.def("function_from_cycle", &function_from_cycle);
    m.def("apply_component", &apply_component);
    m.def("compose", [](const BooleanMap& f, Word x, const std::vector<int>& idx) {
        return compose(f, x, idx);
    });
    m.def("hbar", &hbar);
    m.def("is_square_free", &is_square_free);
    m.def("is_strongly_connected_gamma", [](const BooleanMap& f, std::vector<int> p_set) {
        return is_strongly_connected(p_set.empty() ? gamma(f) : gamma_p(f, std::move(p_set)));
    }, py::arg("f"), py::arg("p_set") = std::vector<int>{});
    m.def("completeness_b", [](const BooleanMap& f, int b_max) { return completeness_b(f, b_max); },
          py::arg("f"), py::arg("b_max") = -1);

    py::class_<StochasticMatrix>(m, "StochasticMatrix")
        .def_readonly("n_bits", &StochasticMatrix::n_bits)
        .def_readonly("denom", &StochasticMatrix::denom)
        .def("numerator", [](const StochasticMatrix& m_, std::size_t r, std::size_t c) {
            return m_.at(r, c);
        })
        .def("to_doubles", &StochasticMatrix::to_doubles);

    m.def("uniform_walk_matrix", &uniform_walk_matrix);
    m.def("lazy_walk_matrix", &lazy_walk_matrix);
    m.def("is_doubly_stochastic", &is_doubly_stochastic);
    m.def("distance_to_uniform", &distance_to_uniform);
    m.def("mixing_time", &mixing_time);
    m.def("practical_mixing_time", &practical_mixing_time);

    m.def("stopping_time_bound", &stopping_time_bound);
    m.def("conjecture_curve", &conjecture_curve);
    m.def("simulate_stopping_time",
          [](const BooleanMap& f, Word x0, std::uint64_t seed) {
              return simulate_stopping_time(f, x0, seed).steps;
          });
    m.def("estimate_stopping_time",
          [](const BooleanMap& f, int trials, std::uint64_t seed) {
              const auto s = estimate_stopping_time(f, trials, seed);
              py::dict d;
              d["n_bits"] = s.n_bits;
              d["trials"] = s.trials;
              d["mean"] = s.mean;
              d["std_error"] = s.std_error;
              d["bound"] = s.bound;
              d["curve"] = s.curve;
              return d;
          });

    py::enum_<WalkVariant>(m, "WalkVariant")
        .value("Plain", WalkVariant::Plain)
        .value("Gated", WalkVariant::Gated);

    py::class_<Generator>(m, "Generator")
        .def(py::init<BooleanMap, int, Word, WalkVariant, std::uint64_t>(), py::arg("f"),
             py::arg("b"), py::arg("x0"), py::arg("variant"), py::arg("seed"))
        .def("next", &Generator::next)
        .def("bits", &Generator::bits)
        .def_property_readonly("state", &Generator::state);

    m.def("monobit_test", [](const std::vector<std::uint8_t>& bits, double threshold) {
        return report_to_dict(monobit_test(bits, threshold));
    }, py::arg("bits"), py::arg("threshold") = 1e-4);
    m.def("runs_test", [](const std::vector<std::uint8_t>& bits, double threshold) {
        return report_to_dict(runs_test(bits, threshold));
    }, py::arg("bits"), py::arg("threshold") = 1e-4);
    m.def("chi_square_uniformity",
          [](const std::vector<Word>& samples, int n_bits, double threshold) {
              return report_to_dict(chi_square_uniformity(samples, n_bits, threshold));
          },
          py::arg("samples"), py::arg("n_bits"), py::arg("threshold") = 1e-4);

    py::class_<ExtendedPoint>(m, "ExtendedPoint")
        .def(py::init([](int n_bits, Word e, std::vector<int> u, std::vector<int> v,
                         std::vector<int> p_set) {
                 ExtendedPoint x{n_bits, e, std::move(u), std::move(v), std::move(p_set)};
                 validate(x);
                 return x;
             }),
             py::arg("n_bits"), py::arg("e"), py::arg("u"), py::arg("v"), py::arg("p_set"))
        .def_readonly("n_bits", &ExtendedPoint::n_bits)
        .def_readonly("e", &ExtendedPoint::e)
        .def_readonly("u", &ExtendedPoint::u)
        .def_readonly("v", &ExtendedPoint::v);

    m.def("shift_sigma", &shift_sigma);
    m.def("gf_step", &gf_step);
    m.def("distance", [](const ExtendedPoint& x, const ExtendedPoint& y, int depth, bool spaced) {
        return distance(x, y, depth).to_string(spaced);
    }, py::arg("x"), py::arg("y"), py::arg("depth"), py::arg("spaced") = true);

    m.def("fixture_map", &fixture_map);
    m.def("fixture_b", [](char tag) { return fixture(tag).practical_b; });
}
