#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "icrf/channel.hpp"

// Every mutual-information quantity appearing in the regime conditions and
// rate regions, in bits per symbol, for mutually independent CN(0, P_k)
// inputs unless an explicit input covariance is supplied. Three evaluation
// routes: closed forms (phase fading), Gauss-Laguerre / periodic quadrature,
// and seeded Monte Carlo over the generic log-det conditional MI.

namespace icrf {

enum class MITermKind {
    DesiredWithRelay,        // I(Xk,X3; Yk | Xo, Hk)
    InterfAsNoise,           // I(Xk; Yj | Hj)                 k -> j
    InterfConditioned,       // I(Xk; Yj | Xj, Hj)             k -> j
    SumAll,                  // I(X1,X2,X3; Yj | Hj)
    SourceToRx1AndRelay,     // I(Xk; Y1,Y3 | Xo, X3, H)
    CrossWithRelay,          // I(Xk,X3; Yj | Xj, Hj)          k -> j
    SourceAtOppConditioned,  // I(Xk; Yj | Xj, X3, Hj)         k -> j
    JointToRx1Relay,         // I(X1,X2; Y1,Y3 | X3, H)
    SourceToAllOutputs,      // I(Xk; Y1,Y2,Y3 | Xo, X3, H)
    JointToAllOutputs,       // I(X1,X2; Y1,Y2,Y3 | X3, H)
    SumAtRxPair,             // I(X1,X2,X3; Y1,Y2 | H)
};

struct MITerm {
    MITermKind kind;
    int k = 0;  // source pair index in {1,2} where applicable
    int j = 0;  // destination pair index in {1,2} where applicable

    static MITerm desired_with_relay(int k) { return {MITermKind::DesiredWithRelay, k, 0}; }
    static MITerm interf_as_noise(int k, int j) { return {MITermKind::InterfAsNoise, k, j}; }
    static MITerm interf_conditioned(int k, int j) { return {MITermKind::InterfConditioned, k, j}; }
    static MITerm sum_all(int j) { return {MITermKind::SumAll, 0, j}; }
    static MITerm source_to_rx1_relay(int k) { return {MITermKind::SourceToRx1AndRelay, k, 0}; }
    static MITerm cross_with_relay(int k, int j) { return {MITermKind::CrossWithRelay, k, j}; }
    static MITerm source_at_opp_conditioned(int k, int j) {
        return {MITermKind::SourceAtOppConditioned, k, j};
    }
    static MITerm joint_to_rx1_relay() { return {MITermKind::JointToRx1Relay, 0, 0}; }
    static MITerm source_to_all(int k) { return {MITermKind::SourceToAllOutputs, k, 0}; }
    static MITerm joint_to_all() { return {MITermKind::JointToAllOutputs, 0, 0}; }
    static MITerm sum_at_rx_pair() { return {MITermKind::SumAtRxPair, 0, 0}; }
};

std::string to_string(const MITerm& t);
MITerm term_from_string(const std::string& s);
std::vector<MITerm> all_terms();

enum class MIMethod { ClosedForm, Quadrature, MonteCarlo };
std::string to_string(MIMethod m);

struct MIEstimate {
    double value = 0;       // bits/symbol
    double std_error = 0;   // 0 for deterministic routes
    long long n_samples = 0;
    MIMethod method = MIMethod::ClosedForm;
};

// Hermitian psd input covariance; diagonal holds the transmit powers.
struct InputCovariance {
    Eigen::Matrix3cd m;

    explicit InputCovariance(const Eigen::Matrix3cd& c);
    static InputCovariance independent(double p1, double p2, double p3);
};

// 0-based index sets: inputs {0,1,2} = X1,X2,X3; outputs {0,1,2} = Y1,Y2,Y3.
// Inputs in neither set act as additional Gaussian noise at the outputs.
struct SubsetSpec {
    std::vector<int> interest;
    std::vector<int> conditioned;
    std::vector<int> outputs;
};

SubsetSpec subset_for_term(const MITerm& t);

struct CondMIResult {
    double bits = 0;
    bool degenerate_conditioning = false;  // a conditioned block needed a pseudo-inverse
};

// I(X_A; Y_O | X_B, H = draw) for jointly Gaussian inputs with covariance
// cov and unit noise:
//   log2 det(I + G_R K_R G_R^H) - log2 det(I + G_S K_S G_S^H),
// R = inputs not conditioned, S = R minus the inputs of interest, K the
// Schur complement of the respective conditioning block of cov. The second
// factor vanishes when interest + conditioned covers all inputs.
CondMIResult gaussian_mi_conditional(const ChannelDraw& draw, const InputCovariance& cov,
                                     const SubsetSpec& spec);

// The Schur complements depend only on (cov, spec); preparing them once
// turns per-draw evaluation into two small determinants.
struct PreparedCondMI {
    std::vector<int> outputs, rest, stray;
    Eigen::MatrixXcd k_rest, k_stray;
    bool degenerate_conditioning = false;
};
PreparedCondMI prepare_cond_mi(const InputCovariance& cov, const SubsetSpec& spec);
double eval_cond_mi(const ChannelDraw& draw, const PreparedCondMI& prep);

struct McSettings {
    long long samples = 100000;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = decide from hardware
};

// Exact closed forms; JointToRx1Relay and JointToAllOutputs go through the
// uniform-phase cosine quadratures. SumAtRxPair has no phase-fading form
// and throws UnsupportedTermError.
MIEstimate phase_mi(const MITerm& t, const NetworkParams& params);

// Expectations over the unit-mean exponential link gains. Terms with at
// most two exponential variables (after integrating the numerator variable
// of ratio terms through e1_scaled) use Gauss-Laguerre quadrature; the
// rest use seeded Monte Carlo with the std_error filled in.
MIEstimate rayleigh_mi(const MITerm& t, const NetworkParams& params, const McSettings& mc = {});

// Mean of gaussian_mi_conditional over seeded draws. Index-derived seeds
// and fixed chunking make the result independent of the worker count.
MIEstimate mc_mi(const SubsetSpec& spec, FadingModel model, const NetworkParams& params,
                 const InputCovariance& cov, const McSettings& mc = {},
                 bool* degenerate = nullptr);
MIEstimate mc_mi(const MITerm& t, FadingModel model, const NetworkParams& params,
                 const InputCovariance& cov, const McSettings& mc = {});

// 64-point Gauss-Laguerre rule shared by the Rayleigh expectations.
const std::vector<double>& gl_nodes();
const std::vector<double>& gl_weights();

// E{log2(1 + alpha U + beta V)}, U,V iid Exp(1); degenerate coefficients
// collapse to the single-exponential identity e1_scaled(1/c)/ln 2.
double expect_log2_sum2(double alpha, double beta);

// E{log2(1 + c U / (1 + d1 V + d2 W))}, the treated-as-noise form.
double expect_log2_ratio(double c, double d1, double d2);

}  // namespace icrf
