#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "icrf/channel.hpp"
#include "icrf/cli.hpp"
#include "icrf/errors.hpp"
#include "icrf/exp_integral.hpp"
#include "icrf/mutual_info.hpp"
#include "icrf/oracle.hpp"
#include "icrf/placement.hpp"
#include "icrf/regimes.hpp"
#include "icrf/regions.hpp"
#include "icrf/scenario_io.hpp"

namespace py = pybind11;
using namespace icrf;

namespace {

McSettings mc_settings(long long samples, std::uint64_t seed) { return {samples, seed, 0}; }

RegionSettings region_settings(long long samples, std::uint64_t seed) {
    RegionSettings st;
    st.mc = mc_settings(samples, seed);
    st.regime.mc = st.mc;
    return st;
}

}  // namespace

PYBIND11_MODULE(_icrf, m) {
    m.doc() = "fading interference channel with relay and feedback: regimes, regions, maps";

    py::class_<NetworkParams>(m, "NetworkParams")
        .def(py::init<>())
        .def_readwrite("a11", &NetworkParams::a11)
        .def_readwrite("a12", &NetworkParams::a12)
        .def_readwrite("a13", &NetworkParams::a13)
        .def_readwrite("a21", &NetworkParams::a21)
        .def_readwrite("a22", &NetworkParams::a22)
        .def_readwrite("a23", &NetworkParams::a23)
        .def_readwrite("a31", &NetworkParams::a31)
        .def_readwrite("a32", &NetworkParams::a32)
        .def_readwrite("p1", &NetworkParams::p1)
        .def_readwrite("p2", &NetworkParams::p2)
        .def_readwrite("p3", &NetworkParams::p3)
        .def("validate", &NetworkParams::validate)
        .def("swapped", &NetworkParams::swapped);

    py::class_<Point2>(m, "Point2")
        .def(py::init([](double x, double y) { return Point2{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y);

    py::class_<Layout>(m, "Layout")
        .def(py::init<>())
        .def_readwrite("tx1", &Layout::tx1)
        .def_readwrite("tx2", &Layout::tx2)
        .def_readwrite("rx1", &Layout::rx1)
        .def_readwrite("rx2", &Layout::rx2)
        .def_readwrite("amplitude_exponent", &Layout::amplitude_exponent)
        .def_static("reference", &Layout::reference);

    py::class_<ChannelDraw>(m, "ChannelDraw")
        .def_readonly("h11", &ChannelDraw::h11)
        .def_readonly("h12", &ChannelDraw::h12)
        .def_readonly("h13", &ChannelDraw::h13)
        .def_readonly("h21", &ChannelDraw::h21)
        .def_readonly("h22", &ChannelDraw::h22)
        .def_readonly("h23", &ChannelDraw::h23)
        .def_readonly("h31", &ChannelDraw::h31)
        .def_readonly("h32", &ChannelDraw::h32);

    py::class_<MIEstimate>(m, "MIEstimate")
        .def_readonly("value", &MIEstimate::value)
        .def_readonly("std_error", &MIEstimate::std_error)
        .def_readonly("n_samples", &MIEstimate::n_samples)
        .def_property_readonly("method",
                               [](const MIEstimate& e) { return to_string(e.method); })
        .def("__repr__", [](const MIEstimate& e) {
            std::ostringstream os;
            os << "MIEstimate(value=" << e.value << ", std_error=" << e.std_error << ")";
            return os.str();
        });

    py::class_<ConditionEntry>(m, "ConditionEntry")
        .def_readonly("name", &ConditionEntry::name)
        .def_readonly("lhs", &ConditionEntry::lhs)
        .def_readonly("rhs", &ConditionEntry::rhs)
        .def_readonly("std_error", &ConditionEntry::std_error)
        .def_property_readonly("margin", &ConditionEntry::margin)
        .def_property_readonly("status",
                               [](const ConditionEntry& e) { return to_string(e.status); })
        .def_property_readonly("satisfied", [](const ConditionEntry& e) {
            return e.status == EntryStatus::Satisfied;
        });

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("entries", &ConditionReport::entries)
        .def_property_readonly("overall",
                               [](const ConditionReport& r) { return to_string(r.overall); })
        .def_property_readonly("satisfied", &ConditionReport::satisfied);

    py::class_<HalfPlane>(m, "HalfPlane")
        .def_readonly("w1", &HalfPlane::w1)
        .def_readonly("w2", &HalfPlane::w2)
        .def_readonly("c", &HalfPlane::c)
        .def_readonly("cap_std_error", &HalfPlane::cap_std_error);

    py::class_<RateRegion>(m, "RateRegion")
        .def_readonly("constraints", &RateRegion::constraints)
        .def_readonly("vertices", &RateRegion::vertices)
        .def_property_readonly("regime",
                               [](const RateRegion& r) { return to_string(r.meta.regime); })
        .def_property_readonly("is_capacity",
                               [](const RateRegion& r) { return r.meta.is_capacity; })
        .def_property_readonly("note", [](const RateRegion& r) { return r.meta.note; })
        .def("contains", [](const RateRegion& r, double r1, double r2) {
            return contains(r, r1, r2);
        });

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("snr", &SweepPoint::snr)
        .def_readonly("c_fb_tx", &SweepPoint::c_fb_tx)
        .def_readonly("c_fb", &SweepPoint::c_fb)
        .def_readonly("ratio", &SweepPoint::ratio);

    py::class_<CheckOutcome>(m, "CheckOutcome")
        .def_readonly("name", &CheckOutcome::name)
        .def_readonly("n_checked", &CheckOutcome::n_checked)
        .def_readonly("violations", &CheckOutcome::violations)
        .def_readonly("indeterminate", &CheckOutcome::indeterminate)
        .def_readonly("worst_margin", &CheckOutcome::worst_margin)
        .def_readonly("pass_", &CheckOutcome::pass);

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("suite", &OracleReport::suite)
        .def_readonly("seed", &OracleReport::seed)
        .def_readonly("checks", &OracleReport::checks)
        .def_readonly("pass_", &OracleReport::pass);

    py::class_<PlacementGrid>(m, "PlacementGrid")
        .def_readonly("resolution", &PlacementGrid::resolution)
        .def("cell_class",
             [](const PlacementGrid& g, int config_idx, int row, int col) {
                 return to_string(g.at(config_idx, row, col));
             })
        .def("csv", [](const PlacementGrid& g) { return export_map_csv(g); })
        .def("pgm", [](const PlacementGrid& g, const std::string& config) {
            const std::vector<std::uint8_t> bytes =
                export_map_pgm(g, feedback_config_from_string(config));
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        });

    m.def("e1", [](double x) { return e1(x); }, py::arg("x"));
    m.def("e1_scaled", [](double x) { return e1_scaled(x); }, py::arg("x"));

    m.def(
        "attenuation_from_geometry",
        [](const Layout& l, const Point2& relay, double p1, double p2, double p3) {
            return attenuation_from_geometry(l, relay, p1, p2, p3);
        },
        py::arg("layout"), py::arg("relay"), py::arg("p1") = 0, py::arg("p2") = 0,
        py::arg("p3") = 0);

    m.def(
        "sample_channel",
        [](const std::string& model, const NetworkParams& p, std::uint64_t seed,
           std::uint64_t index) {
            return sample_channel(fading_model_from_string(model), p, seed, index);
        },
        py::arg("model"), py::arg("params"), py::arg("seed"), py::arg("index"));

    m.def(
        "apply_channel",
        [](const ChannelDraw& d, cplx x1, cplx x2, cplx x3, cplx z1, cplx z2, cplx z3) {
            return apply_channel(d, x1, x2, x3, z1, z2, z3);
        },
        py::arg("draw"), py::arg("x1"), py::arg("x2"), py::arg("x3"), py::arg("z1") = cplx(0),
        py::arg("z2") = cplx(0), py::arg("z3") = cplx(0));

    m.def(
        "evaluate_mi",
        [](const std::string& term, const std::string& model, const NetworkParams& p,
           long long samples, std::uint64_t seed) {
            const MITerm t = term_from_string(term);
            if (fading_model_from_string(model) == FadingModel::Phase) {
                try {
                    return phase_mi(t, p);
                } catch (const UnsupportedTermError&) {
                    return mc_mi(t, FadingModel::Phase, p,
                                 InputCovariance::independent(p.p1, p.p2, p.p3),
                                 mc_settings(samples, seed));
                }
            }
            return rayleigh_mi(t, p, mc_settings(samples, seed));
        },
        py::arg("term"), py::arg("model"), py::arg("params"), py::arg("samples") = 100000,
        py::arg("seed") = 0);

    m.def(
        "mc_mi",
        [](const std::string& term, const std::string& model, const NetworkParams& p,
           const Eigen::MatrixXcd& cov, long long samples, std::uint64_t seed) {
            if (cov.rows() != 3 || cov.cols() != 3)
                throw std::invalid_argument("covariance must be 3x3");
            Eigen::Matrix3cd c = cov;
            return mc_mi(term_from_string(term), fading_model_from_string(model), p,
                         InputCovariance(c), mc_settings(samples, seed));
        },
        py::arg("term"), py::arg("model"), py::arg("params"), py::arg("covariance"),
        py::arg("samples") = 100000, py::arg("seed") = 0);

    m.def("term_names", [] {
        std::vector<std::string> names;
        for (const MITerm& t : all_terms()) names.push_back(to_string(t));
        return names;
    });

    m.def(
        "check_vsi",
        [](const std::string& config, const std::string& model, const NetworkParams& p) {
            return check_vsi(feedback_config_from_string(config),
                             fading_model_from_string(model), p);
        },
        py::arg("config"), py::arg("model"), py::arg("params"));
    m.def(
        "check_si",
        [](const std::string& config, const std::string& model, const NetworkParams& p) {
            return check_si(feedback_config_from_string(config), fading_model_from_string(model),
                            p);
        },
        py::arg("config"), py::arg("model"), py::arg("params"));
    m.def(
        "check_txfb",
        [](const NetworkParams& p, const std::string& model) {
            return check_txfb(p, fading_model_from_string(model));
        },
        py::arg("params"), py::arg("model"));
    m.def(
        "check_txfb_partial",
        [](const NetworkParams& p, const std::string& model) {
            return check_txfb_partial(p, fading_model_from_string(model));
        },
        py::arg("params"), py::arg("model"));
    m.def(
        "classify",
        [](const std::string& config, const std::string& model, const NetworkParams& p) {
            return to_string(classify(feedback_config_from_string(config),
                                      fading_model_from_string(model), p));
        },
        py::arg("config"), py::arg("model"), py::arg("params"));

    m.def(
        "build_region",
        [](const std::string& config, const std::string& regime, const std::string& model,
           const NetworkParams& p, bool force, long long samples, std::uint64_t seed) {
            Regime r;
            if (regime == "vsi")
                r = Regime::VSI;
            else if (regime == "si" || regime == "si_not_vsi")
                r = Regime::SINotVSI;
            else
                throw std::invalid_argument("regime must be 'vsi' or 'si'");
            return build_region(feedback_config_from_string(config), r,
                                fading_model_from_string(model), p, force,
                                region_settings(samples, seed));
        },
        py::arg("config"), py::arg("regime"), py::arg("model"), py::arg("params"),
        py::arg("force") = false, py::arg("samples") = 100000, py::arg("seed") = 0);

    m.def(
        "region_emarc",
        [](const std::string& which, const std::string& model, const NetworkParams& p,
           long long samples, std::uint64_t seed) {
            ComponentChannel c;
            if (which == "emarc1")
                c = ComponentChannel::Emarc1;
            else if (which == "emarc2")
                c = ComponentChannel::Emarc2;
            else if (which == "marcf")
                c = ComponentChannel::Marcf;
            else if (which == "pemarc")
                c = ComponentChannel::Pemarc;
            else
                throw std::invalid_argument("which must be emarc1|emarc2|marcf|pemarc");
            return region_emarc(c, fading_model_from_string(model), p,
                                region_settings(samples, seed));
        },
        py::arg("which"), py::arg("model"), py::arg("params"), py::arg("samples") = 100000,
        py::arg("seed") = 0);

    m.def(
        "region_txfb_inner",
        [](const std::string& model, const NetworkParams& p, bool force, long long samples,
           std::uint64_t seed) {
            return region_txfb_inner(fading_model_from_string(model), p, force,
                                     region_settings(samples, seed));
        },
        py::arg("model"), py::arg("params"), py::arg("force") = false,
        py::arg("samples") = 100000, py::arg("seed") = 0);
    m.def(
        "region_txfb_outer",
        [](const std::string& model, const NetworkParams& p, long long samples,
           std::uint64_t seed) {
            return region_txfb_outer(fading_model_from_string(model), p,
                                     region_settings(samples, seed));
        },
        py::arg("model"), py::arg("params"), py::arg("samples") = 100000, py::arg("seed") = 0);

    m.def("intersect", [](const RateRegion& a, const RateRegion& b) { return intersect(a, b); });

    m.def(
        "sumrate_ratio_sweep",
        [](double alpha12, double alpha21, const NetworkParams& fixed, double a_exp,
           double b_exp, const std::vector<double>& snrs, long long samples,
           std::uint64_t seed) {
            return sumrate_ratio_sweep(alpha12, alpha21, fixed, a_exp, b_exp, snrs,
                                       mc_settings(samples, seed));
        },
        py::arg("alpha12"), py::arg("alpha21"), py::arg("fixed"), py::arg("a_exp"),
        py::arg("b_exp"), py::arg("snr_list"), py::arg("samples") = 100000, py::arg("seed") = 0);

    m.def(
        "scan_placement",
        [](const Layout& layout, double p1, double p2, double p3, const std::string& model,
           const std::vector<std::string>& configs, const std::string& kind,
           const std::vector<double>& bbox, int resolution) {
            std::vector<FeedbackConfig> cs;
            for (const auto& c : configs) cs.push_back(feedback_config_from_string(c));
            BBox box = bbox.size() == 4 ? BBox{bbox[0], bbox[1], bbox[2], bbox[3]}
                                        : default_bbox(layout);
            return scan_placement(layout, p1, p2, p3, fading_model_from_string(model), cs,
                                  kind == "si" ? RegimeKind::SI : RegimeKind::VSI, box,
                                  resolution);
        },
        py::arg("layout"), py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("model"),
        py::arg("configs"), py::arg("kind") = "vsi", py::arg("bbox") = std::vector<double>{},
        py::arg("resolution") = 100);

    m.def(
        "verify_independence_optimal",
        [](const std::string& model, const NetworkParams& p, int n_cov, long long n_draws,
           std::uint64_t seed) {
            return verify_independence_optimal(fading_model_from_string(model), p, {}, n_cov,
                                               n_draws, seed);
        },
        py::arg("model"), py::arg("params"), py::arg("n_cov") = 100, py::arg("n_draws") = 10000,
        py::arg("seed") = 0);
    m.def("verify_psd_inequality", &verify_psd_inequality, py::arg("n_draws") = 100000,
          py::arg("seed") = 0);
    m.def(
        "crosscheck_closed_forms",
        [](const std::string& model, const NetworkParams& p, long long n_draws,
           std::uint64_t seed) {
            return crosscheck_closed_forms(fading_model_from_string(model), p, n_draws, seed);
        },
        py::arg("model"), py::arg("params"), py::arg("n_draws") = 100000, py::arg("seed") = 0);
    m.def(
        "verify_regime_nesting",
        [](const std::string& model, int n_scenarios, std::uint64_t seed) {
            return verify_regime_nesting(fading_model_from_string(model), n_scenarios, seed);
        },
        py::arg("model"), py::arg("n_scenarios") = 1000, py::arg("seed") = 0);

    m.def(
        "load_scenario",
        [](const std::string& text) {
            const Scenario s = parse_scenario(ordered_json::parse(text));
            return py::make_tuple(s.params, to_string(s.model));
        },
        py::arg("json_text"), "parse a scenario JSON string -> (params, model)");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run the CLI in-process -> (exit_code, stdout, stderr)");
}
