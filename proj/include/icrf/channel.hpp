#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

// Two transmitter-receiver pairs sharing the channel, plus one relay.
// Node indices: 1 = pair 1, 2 = pair 2, 3 = relay. A coefficient a_lk
// attenuates the amplitude of the signal from node l at node k. The relay
// has no self link, so exactly eight links exist:
//   y1 = h11 x1 + h21 x2 + h31 x3 + z1
//   y2 = h12 x1 + h22 x2 + h32 x3 + z2
//   y3 = h13 x1 + h23 x2        + z3
// Additive noise is CN(0,1); non-unit noise is absorbed into the
// attenuations by rescaling.

namespace icrf {

using cplx = std::complex<double>;

struct NetworkParams {
    double a11 = 0, a12 = 0, a13 = 0;
    double a21 = 0, a22 = 0, a23 = 0;
    double a31 = 0, a32 = 0;
    double p1 = 0, p2 = 0, p3 = 0;

    // Throws std::invalid_argument on non-finite or negative entries.
    void validate() const;

    // Relabels the pairs 1<->2 (mirror scenarios share one set of formulas).
    NetworkParams swapped() const;
};

enum class FadingModel { Phase, Rayleigh };

enum class FeedbackConfig {
    NoFeedback,
    FullToRelay,                    // both receivers feed the relay
    PartialRx1ToRelay,              // only Rx1 feeds the relay
    FullToRelayPlusOppositeTx,      // relay feedback plus Rx_k -> Tx_{3-k}
    FullToRelayPlusCorrespondingTx, // relay feedback plus Rx_k -> Tx_k
    PartialRx1ToRelayPlusTx1,       // Rx1 -> relay and Rx1 -> Tx1
};

std::string to_string(FadingModel m);
std::string to_string(FeedbackConfig c);
FadingModel fading_model_from_string(const std::string& s);
FeedbackConfig feedback_config_from_string(const std::string& s);

struct Point2 {
    double x = 0, y = 0;
};

struct Layout {
    Point2 tx1, tx2, rx1, rx2;
    double amplitude_exponent = 2.0;  // power then decays as d^(-2*exponent)

    void validate() const;

    // Mirror-symmetric placement whose fixed links come out as
    // a11 = a22 ~ 0.18 and a12 = a21 ~ 0.25 with exponent 2.
    static Layout reference();
};

struct ChannelDraw {
    cplx h11, h12, h13;
    cplx h21, h22, h23;
    cplx h31, h32;
};

// a_lk = d_lk^(-amplitude_exponent) for the eight links; powers are passed
// through unchanged. Throws DegenerateGeometryError if the relay coincides
// with a node.
NetworkParams attenuation_from_geometry(const Layout& layout, Point2 relay, double p1 = 0,
                                        double p2 = 0, double p3 = 0);

// One fading realization, fully determined by (seed, index).
// Phase:    h_lk = a_lk * exp(j theta), theta uniform on [0, 2pi).
// Rayleigh: h_lk = a_lk * u, u standard circularly symmetric complex normal.
ChannelDraw sample_channel(FadingModel model, const NetworkParams& params, std::uint64_t seed,
                           std::uint64_t index);

// Eq-of-motion of the channel for one symbol; y3 has no relay term.
std::array<cplx, 3> apply_channel(const ChannelDraw& d, cplx x1, cplx x2, cplx x3, cplx z1,
                                  cplx z2, cplx z3);

}  // namespace icrf
