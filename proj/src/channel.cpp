#include "icrf/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "icrf/errors.hpp"
#include "icrf/prng.hpp"

namespace icrf {

namespace {

void check_field(double v, const char* name) {
    if (!std::isfinite(v) || v < 0)
        throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

void NetworkParams::validate() const {
    check_field(a11, "a11");
    check_field(a12, "a12");
    check_field(a13, "a13");
    check_field(a21, "a21");
    check_field(a22, "a22");
    check_field(a23, "a23");
    check_field(a31, "a31");
    check_field(a32, "a32");
    check_field(p1, "p1");
    check_field(p2, "p2");
    check_field(p3, "p3");
}

NetworkParams NetworkParams::swapped() const {
    NetworkParams s;
    s.a11 = a22;
    s.a22 = a11;
    s.a12 = a21;
    s.a21 = a12;
    s.a13 = a23;
    s.a23 = a13;
    s.a31 = a32;
    s.a32 = a31;
    s.p1 = p2;
    s.p2 = p1;
    s.p3 = p3;
    return s;
}

std::string to_string(FadingModel m) {
    return m == FadingModel::Phase ? "phase" : "rayleigh";
}

FadingModel fading_model_from_string(const std::string& s) {
    if (s == "phase") return FadingModel::Phase;
    if (s == "rayleigh") return FadingModel::Rayleigh;
    throw ScenarioParseError("unknown fading model '" + s + "'");
}

std::string to_string(FeedbackConfig c) {
    switch (c) {
        case FeedbackConfig::NoFeedback: return "no_feedback";
        case FeedbackConfig::FullToRelay: return "full_to_relay";
        case FeedbackConfig::PartialRx1ToRelay: return "partial_rx1_to_relay";
        case FeedbackConfig::FullToRelayPlusOppositeTx: return "full_plus_opposite_tx";
        case FeedbackConfig::FullToRelayPlusCorrespondingTx: return "full_plus_corresponding_tx";
        case FeedbackConfig::PartialRx1ToRelayPlusTx1: return "partial_rx1_plus_tx1";
    }
    return "?";
}

FeedbackConfig feedback_config_from_string(const std::string& s) {
    if (s == "no_feedback" || s == "none") return FeedbackConfig::NoFeedback;
    if (s == "full_to_relay" || s == "full") return FeedbackConfig::FullToRelay;
    if (s == "partial_rx1_to_relay" || s == "partial_rx1") return FeedbackConfig::PartialRx1ToRelay;
    if (s == "full_plus_opposite_tx") return FeedbackConfig::FullToRelayPlusOppositeTx;
    if (s == "full_plus_corresponding_tx") return FeedbackConfig::FullToRelayPlusCorrespondingTx;
    if (s == "partial_rx1_plus_tx1") return FeedbackConfig::PartialRx1ToRelayPlusTx1;
    throw ScenarioParseError("unknown feedback config '" + s + "'");
}

void Layout::validate() const {
    const Point2 pts[4] = {tx1, tx2, rx1, rx2};
    const char* names[4] = {"tx1", "tx2", "rx1", "rx2"};
    for (int i = 0; i < 4; ++i) {
        if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y))
            throw std::invalid_argument(std::string(names[i]) + " position must be finite");
        for (int j = i + 1; j < 4; ++j) {
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
                throw DegenerateGeometryError(std::string("nodes ") + names[i] + " and " +
                                              names[j] + " coincide");
        }
    }
    if (!(amplitude_exponent > 0))
        throw std::invalid_argument("amplitude_exponent must be > 0");
}

Layout Layout::reference() {
    Layout l;
    l.tx1 = {0.0, 1.0};
    l.tx2 = {0.0, -1.0};
    l.rx1 = {1.9044, -0.389};
    l.rx2 = {1.9044, 0.389};
    l.amplitude_exponent = 2.0;
    return l;
}

namespace {

double attenuation(Point2 a, Point2 b, double exponent) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double d = std::hypot(dx, dy);
    if (d == 0) throw DegenerateGeometryError("coincident nodes in attenuation computation");
    return std::pow(d, -exponent);
}

}  // namespace

NetworkParams attenuation_from_geometry(const Layout& layout, Point2 relay, double p1, double p2,
                                        double p3) {
    layout.validate();
    const double e = layout.amplitude_exponent;
    NetworkParams p;
    p.a11 = attenuation(layout.tx1, layout.rx1, e);
    p.a12 = attenuation(layout.tx1, layout.rx2, e);
    p.a13 = attenuation(layout.tx1, relay, e);
    p.a21 = attenuation(layout.tx2, layout.rx1, e);
    p.a22 = attenuation(layout.tx2, layout.rx2, e);
    p.a23 = attenuation(layout.tx2, relay, e);
    p.a31 = attenuation(relay, layout.rx1, e);
    p.a32 = attenuation(relay, layout.rx2, e);
    p.p1 = p1;
    p.p2 = p2;
    p.p3 = p3;
    return p;
}

namespace {

// Fixed link order keeps draws reproducible across the library.
enum { kStreamChannel = 0 };

cplx draw_coeff(FadingModel model, double a, UniformStream& u) {
    const double u1 = u.next();
    const double u2 = u.next();
    if (model == FadingModel::Phase) {
        const double theta = kTwoPi * u1;
        return cplx(a * std::cos(theta), a * std::sin(theta));
    }
    // |u|^2 ~ Exp(1), phase uniform: standard circularly symmetric normal.
    const double r = std::sqrt(-std::log1p(-u1));
    const double theta = kTwoPi * u2;
    return cplx(a * r * std::cos(theta), a * r * std::sin(theta));
}

}  // namespace

ChannelDraw sample_channel(FadingModel model, const NetworkParams& params, std::uint64_t seed,
                           std::uint64_t index) {
    params.validate();
    UniformStream u(seed, index, kStreamChannel);
    ChannelDraw d;
    d.h11 = draw_coeff(model, params.a11, u);
    d.h12 = draw_coeff(model, params.a12, u);
    d.h13 = draw_coeff(model, params.a13, u);
    d.h21 = draw_coeff(model, params.a21, u);
    d.h22 = draw_coeff(model, params.a22, u);
    d.h23 = draw_coeff(model, params.a23, u);
    d.h31 = draw_coeff(model, params.a31, u);
    d.h32 = draw_coeff(model, params.a32, u);
    return d;
}

std::array<cplx, 3> apply_channel(const ChannelDraw& d, cplx x1, cplx x2, cplx x3, cplx z1,
                                  cplx z2, cplx z3) {
    return {d.h11 * x1 + d.h21 * x2 + d.h31 * x3 + z1,
            d.h12 * x1 + d.h22 * x2 + d.h32 * x3 + z2,
            d.h13 * x1 + d.h23 * x2 + z3};
}

}  // namespace icrf
