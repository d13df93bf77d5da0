#pragma once

#include <array>
#include <string>
#include <vector>

#include "icrf/channel.hpp"
#include "icrf/mutual_info.hpp"
#include "icrf/regimes.hpp"

// Rate regions as convex polygons in the nonnegative quadrant. Regions are
// stored constraint-first; the vertex list is always derived from the
// constraints, never edited directly.

namespace icrf {

struct HalfPlane {
    double w1 = 0, w2 = 0;     // w1 R1 + w2 R2 <= c, with w >= 0
    double c = 0;
    double cap_std_error = 0;  // nonzero when c came from Monte Carlo
};

struct RegionMeta {
    FeedbackConfig config = FeedbackConfig::FullToRelay;
    FadingModel model = FadingModel::Phase;
    Regime regime = Regime::VSI;
    bool is_capacity = false;
    std::string note;
};

struct RateRegion {
    std::vector<HalfPlane> constraints;
    std::vector<std::array<double, 2>> vertices;  // extreme points, CCW from (0,0) side
    RegionMeta meta;
};

// Intersects the half-planes with the nonnegative quadrant and enumerates
// the extreme points. Throws std::invalid_argument if the set is unbounded.
RateRegion make_region(std::vector<HalfPlane> constraints, RegionMeta meta, double tol = 1e-9);

// Convex polygon given by boundary points (hull is taken) -> constraints.
RateRegion region_from_points(const std::vector<std::array<double, 2>>& pts, RegionMeta meta,
                              double tol = 1e-9);

struct RegionSettings {
    double tol = 1e-9;
    McSettings mc;
    RegimeSettings regime;
};

// Capacity (or inner-bound) region of a configuration in a regime.
// VSI: the rectangle of the two relay-aided point-to-point caps.
// SI:  adds the single-receiver sum cap min over the two receivers.
// Tx-feedback configurations delegate to the time-sharing inner regions.
// Throws RegimeMismatchError when the scenario does not classify into
// `regime` and force is false; forced regions carry is_capacity = false.
RateRegion build_region(FeedbackConfig config, Regime regime, FadingModel model,
                        const NetworkParams& params, bool force = false,
                        const RegionSettings& settings = {});

// Component multiple-access relay channels obtained from the network:
// EMARC1/EMARC2 with feedback from both receivers, MARCF/PEMARC with
// feedback from Rx1 only.
enum class ComponentChannel { Emarc1, Emarc2, Marcf, Pemarc };
std::string to_string(ComponentChannel c);

RateRegion region_emarc(ComponentChannel which, FadingModel model, const NetworkParams& params,
                        const RegionSettings& settings = {});

// Time-sharing inner region for feedback to the corresponding transmitters:
// vertices (0,0), (B1,0), (A1,A2), (0,A2) with B1 the single-receiver sum
// rate at Rx1 and A the relay-aided rectangle corner.
RateRegion region_txfb_inner(FadingModel model, const NetworkParams& params, bool force = false,
                             const RegionSettings& settings = {});

// Outer bound for the same configuration: the relay-as-genie MAC region
// intersected with the joint-receiver-pair bound (the latter caps come
// from Monte Carlo and carry cap_std_error).
RateRegion region_txfb_outer(FadingModel model, const NetworkParams& params,
                             const RegionSettings& settings = {});

RateRegion intersect(const RateRegion& a, const RateRegion& b, double tol = 1e-9);

// Membership with tol slack, widened by 3 sigma on Monte Carlo caps.
bool contains(const RateRegion& r, double r1, double r2, double tol = 1e-9);

struct SweepPoint {
    double snr = 0;
    double c_fb_tx = 0;  // single-receiver sum rate with transmitter feedback
    double c_fb = 0;     // sum of the two relay-aided caps (relay feedback only)
    double ratio = 0;
};

// Rayleigh-fading high-SNR sweep: per SNR the cross links scale as
// a12 = alpha12 SNR^((b-1)/2), a21 = alpha21 SNR^((a-1)/2), all powers
// equal SNR. The ratio approaches a/2 for b >= a > 2.
std::vector<SweepPoint> sumrate_ratio_sweep(double alpha12, double alpha21,
                                            const NetworkParams& fixed, double a_exp,
                                            double b_exp, const std::vector<double>& snr_list,
                                            const McSettings& mc = {});

}  // namespace icrf
