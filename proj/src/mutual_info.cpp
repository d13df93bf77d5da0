#include "icrf/mutual_info.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "icrf/errors.hpp"
#include "icrf/exp_integral.hpp"
#include "icrf/prng.hpp"

namespace icrf {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kGlPoints = 64;
constexpr int kPhaseQuad1d = 2048;
constexpr int kPhaseQuad2d = 256;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

void require_pair_index(int v, const char* name) {
    if (v != 1 && v != 2) throw std::invalid_argument(std::string(name) + " must be 1 or 2");
}

}  // namespace

// ---------------------------------------------------------------------------
// term names and index sets
// ---------------------------------------------------------------------------

std::string to_string(const MITerm& t) {
    switch (t.kind) {
        case MITermKind::DesiredWithRelay: return "desired_with_relay_" + std::to_string(t.k);
        case MITermKind::InterfAsNoise:
            return "interf_as_noise_" + std::to_string(t.k) + "_" + std::to_string(t.j);
        case MITermKind::InterfConditioned:
            return "interf_conditioned_" + std::to_string(t.k) + "_" + std::to_string(t.j);
        case MITermKind::SumAll: return "sum_all_" + std::to_string(t.j);
        case MITermKind::SourceToRx1AndRelay:
            return "source_to_rx1_relay_" + std::to_string(t.k);
        case MITermKind::CrossWithRelay:
            return "cross_with_relay_" + std::to_string(t.k) + "_" + std::to_string(t.j);
        case MITermKind::SourceAtOppConditioned:
            return "source_at_opp_conditioned_" + std::to_string(t.k) + "_" + std::to_string(t.j);
        case MITermKind::JointToRx1Relay: return "joint_to_rx1_relay";
        case MITermKind::SourceToAllOutputs: return "source_to_all_" + std::to_string(t.k);
        case MITermKind::JointToAllOutputs: return "joint_to_all";
        case MITermKind::SumAtRxPair: return "sum_at_rx_pair";
    }
    return "?";
}

MITerm term_from_string(const std::string& s) {
    for (const MITerm& t : all_terms())
        if (to_string(t) == s) return t;
    throw ScenarioParseError("unknown MI term '" + s + "'");
}

std::vector<MITerm> all_terms() {
    std::vector<MITerm> v;
    for (int k : {1, 2}) v.push_back(MITerm::desired_with_relay(k));
    for (int k : {1, 2}) v.push_back(MITerm::interf_as_noise(k, 3 - k));
    for (int k : {1, 2}) v.push_back(MITerm::interf_conditioned(k, 3 - k));
    for (int j : {1, 2}) v.push_back(MITerm::sum_all(j));
    for (int k : {1, 2}) v.push_back(MITerm::source_to_rx1_relay(k));
    for (int k : {1, 2}) v.push_back(MITerm::cross_with_relay(k, 3 - k));
    for (int k : {1, 2}) v.push_back(MITerm::source_at_opp_conditioned(k, 3 - k));
    v.push_back(MITerm::joint_to_rx1_relay());
    for (int k : {1, 2}) v.push_back(MITerm::source_to_all(k));
    v.push_back(MITerm::joint_to_all());
    v.push_back(MITerm::sum_at_rx_pair());
    return v;
}

std::string to_string(MIMethod m) {
    switch (m) {
        case MIMethod::ClosedForm: return "closed_form";
        case MIMethod::Quadrature: return "quadrature";
        case MIMethod::MonteCarlo: return "monte_carlo";
    }
    return "?";
}

SubsetSpec subset_for_term(const MITerm& t) {
    const int k = t.k, j = t.j;
    auto in = [](int pair) { return pair - 1; };
    switch (t.kind) {
        case MITermKind::DesiredWithRelay:
            require_pair_index(k, "k");
            return {{in(k), 2}, {in(3 - k)}, {in(k)}};
        case MITermKind::InterfAsNoise:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            return {{in(k)}, {}, {in(j)}};
        case MITermKind::InterfConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            return {{in(k)}, {in(j)}, {in(j)}};
        case MITermKind::SumAll:
            require_pair_index(j, "j");
            return {{0, 1, 2}, {}, {in(j)}};
        case MITermKind::SourceToRx1AndRelay:
            require_pair_index(k, "k");
            return {{in(k)}, {in(3 - k), 2}, {0, 2}};
        case MITermKind::CrossWithRelay:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            return {{in(k), 2}, {in(j)}, {in(j)}};
        case MITermKind::SourceAtOppConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            return {{in(k)}, {in(j), 2}, {in(j)}};
        case MITermKind::JointToRx1Relay: return {{0, 1}, {2}, {0, 2}};
        case MITermKind::SourceToAllOutputs:
            require_pair_index(k, "k");
            return {{in(k)}, {in(3 - k), 2}, {0, 1, 2}};
        case MITermKind::JointToAllOutputs: return {{0, 1}, {2}, {0, 1, 2}};
        case MITermKind::SumAtRxPair: return {{0, 1, 2}, {}, {0, 1}};
    }
    throw std::invalid_argument("bad MITerm");
}

// ---------------------------------------------------------------------------
// Gauss-Laguerre rule (weight e^-x on [0, inf))
// ---------------------------------------------------------------------------

namespace {

struct GlRule {
    std::vector<double> x, w;
};

GlRule compute_gauss_laguerre(int n) {
    GlRule r;
    r.x.resize(n);
    r.w.resize(n);
    double z = 0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - r.x[i - 2]);
        }
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
            }
            pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= 1e-14 * std::max(1.0, std::fabs(z))) break;
        }
        // recompute p2 = L_{n-1}(z) at the converged node
        double p1 = 1.0, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
        }
        pp = n * (p1 - p2) / z;
        r.x[i] = z;
        r.w[i] = -1.0 / (pp * n * p2);
    }
    return r;
}

const GlRule& gl_rule() {
    static const GlRule rule = compute_gauss_laguerre(kGlPoints);
    return rule;
}

}  // namespace

const std::vector<double>& gl_nodes() { return gl_rule().x; }
const std::vector<double>& gl_weights() { return gl_rule().w; }

double expect_log2_sum2(double alpha, double beta) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("negative coefficient");
    if (alpha == 0 && beta == 0) return 0;
    if (alpha == 0 || beta == 0) {
        const double c = alpha + beta;
        return e1_scaled(1.0 / c) / kLn2;
    }
    const auto& x = gl_nodes();
    const auto& w = gl_weights();
    double acc = 0;
    for (int i = 0; i < kGlPoints; ++i) {
        double inner = 0;
        for (int l = 0; l < kGlPoints; ++l) inner += w[l] * std::log1p(alpha * x[i] + beta * x[l]);
        acc += w[i] * inner;
    }
    return acc / kLn2;
}

double expect_log2_ratio(double c, double d1, double d2) {
    if (c < 0 || d1 < 0 || d2 < 0) throw std::invalid_argument("negative coefficient");
    if (c == 0) return 0;
    // E_U log(1 + kappa U) = e1_scaled(1/kappa) integrates the numerator
    // exactly; the denominator variables remain for quadrature.
    const auto& x = gl_nodes();
    const auto& w = gl_weights();
    if (d1 == 0 && d2 == 0) return e1_scaled(1.0 / c) / kLn2;
    if (d1 == 0 || d2 == 0) {
        const double d = d1 + d2;
        double acc = 0;
        for (int i = 0; i < kGlPoints; ++i) acc += w[i] * e1_scaled((1.0 + d * x[i]) / c);
        return acc / kLn2;
    }
    double acc = 0;
    for (int i = 0; i < kGlPoints; ++i) {
        double inner = 0;
        for (int l = 0; l < kGlPoints; ++l)
            inner += w[l] * e1_scaled((1.0 + d1 * x[i] + d2 * x[l]) / c);
        acc += w[i] * inner;
    }
    return acc / kLn2;
}

// ---------------------------------------------------------------------------
// phase-fading closed forms
// ---------------------------------------------------------------------------

namespace {

struct LinkGains {
    // c[l][k] = a_lk^2 * P_l with l in {1,2,3}, k in {1,2,3}; c[3][3] unused
    double c(int l, int k) const { return v[l - 1][k - 1]; }
    double v[3][3];
};

LinkGains gains(const NetworkParams& p) {
    LinkGains g{};
    g.v[0][0] = p.a11 * p.a11 * p.p1;
    g.v[0][1] = p.a12 * p.a12 * p.p1;
    g.v[0][2] = p.a13 * p.a13 * p.p1;
    g.v[1][0] = p.a21 * p.a21 * p.p2;
    g.v[1][1] = p.a22 * p.a22 * p.p2;
    g.v[1][2] = p.a23 * p.a23 * p.p2;
    g.v[2][0] = p.a31 * p.a31 * p.p3;
    g.v[2][1] = p.a32 * p.a32 * p.p3;
    g.v[2][2] = 0;
    return g;
}

// mean of log2(1 + s - m cos(phi)) over phi uniform; midpoint rule on a
// periodic smooth integrand.
double phase_cosine_avg(double s, double m) {
    double acc = 0;
    for (int i = 0; i < kPhaseQuad1d; ++i) {
        const double phi = kTwoPi * (i + 0.5) / kPhaseQuad1d;
        acc += log2_1p(s - m * std::cos(phi));
    }
    return acc / kPhaseQuad1d;
}

// Relay-cut joint term I(X1,X2; Y1,Y3 | X3, H) under phase fading. Only the
// phase combination theta13 + theta21 - theta11 - theta23 survives.
double phase_joint_rx1_relay(const NetworkParams& p, MIMethod* method) {
    const double s = p.p1 * (p.a11 * p.a11 + p.a13 * p.a13) +
                     p.p2 * (p.a21 * p.a21 + p.a23 * p.a23) +
                     p.p1 * p.p2 *
                         (p.a11 * p.a11 * p.a23 * p.a23 + p.a13 * p.a13 * p.a21 * p.a21);
    const double m = 2.0 * p.p1 * p.p2 * p.a13 * p.a21 * p.a11 * p.a23;
    if (m == 0) {
        *method = MIMethod::ClosedForm;
        return log2_1p(s);
    }
    *method = MIMethod::Quadrature;
    return phase_cosine_avg(s, m);
}

// Full-cut joint term I(X1,X2; Y1,Y2,Y3 | X3, H). Two independent uniform
// phase combinations remain; the third is minus their sum.
double phase_joint_all(const NetworkParams& p, MIMethod* method) {
    const double P12 = p.p1 * p.p2;
    const double s = p.p1 * (p.a11 * p.a11 + p.a12 * p.a12 + p.a13 * p.a13) +
                     p.p2 * (p.a21 * p.a21 + p.a22 * p.a22 + p.a23 * p.a23) +
                     P12 * (p.a11 * p.a11 * p.a22 * p.a22 + p.a11 * p.a11 * p.a23 * p.a23 +
                            p.a12 * p.a12 * p.a21 * p.a21 + p.a12 * p.a12 * p.a23 * p.a23 +
                            p.a13 * p.a13 * p.a21 * p.a21 + p.a13 * p.a13 * p.a22 * p.a22);
    const double m1 = 2.0 * P12 * p.a11 * p.a22 * p.a12 * p.a21;
    const double m2 = 2.0 * P12 * p.a12 * p.a23 * p.a13 * p.a22;
    const double m3 = 2.0 * P12 * p.a13 * p.a21 * p.a11 * p.a23;
    if (m1 == 0 && m2 == 0 && m3 == 0) {
        *method = MIMethod::ClosedForm;
        return log2_1p(s);
    }
    *method = MIMethod::Quadrature;
    double acc = 0;
    for (int i = 0; i < kPhaseQuad2d; ++i) {
        const double f1 = kTwoPi * (i + 0.5) / kPhaseQuad2d;
        const double c1 = std::cos(f1);
        for (int l = 0; l < kPhaseQuad2d; ++l) {
            const double f2 = kTwoPi * (l + 0.5) / kPhaseQuad2d;
            acc += log2_1p(s - m1 * c1 - m2 * std::cos(f2) - m3 * std::cos(f1 + f2));
        }
    }
    return acc / (static_cast<double>(kPhaseQuad2d) * kPhaseQuad2d);
}

}  // namespace

MIEstimate phase_mi(const MITerm& t, const NetworkParams& p) {
    p.validate();
    const LinkGains g = gains(p);
    const int k = t.k, j = t.j;
    MIEstimate est;
    est.method = MIMethod::ClosedForm;
    switch (t.kind) {
        case MITermKind::DesiredWithRelay:
            require_pair_index(k, "k");
            est.value = log2_1p(g.c(k, k) + g.c(3, k));
            return est;
        case MITermKind::InterfAsNoise:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = log2_1p(g.c(k, j) / (1.0 + g.c(j, j) + g.c(3, j)));
            return est;
        case MITermKind::InterfConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = log2_1p(g.c(k, j) / (1.0 + g.c(3, j)));
            return est;
        case MITermKind::SumAll:
            require_pair_index(j, "j");
            est.value = log2_1p(g.c(1, j) + g.c(2, j) + g.c(3, j));
            return est;
        case MITermKind::SourceToRx1AndRelay:
            require_pair_index(k, "k");
            est.value = log2_1p(g.c(k, 1) + g.c(k, 3));
            return est;
        case MITermKind::CrossWithRelay:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = log2_1p(g.c(k, j) + g.c(3, j));
            return est;
        case MITermKind::SourceAtOppConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = log2_1p(g.c(k, j));
            return est;
        case MITermKind::SourceToAllOutputs:
            require_pair_index(k, "k");
            est.value = log2_1p(g.c(k, 1) + g.c(k, 2) + g.c(k, 3));
            return est;
        case MITermKind::JointToRx1Relay:
            est.value = phase_joint_rx1_relay(p, &est.method);
            est.n_samples = est.method == MIMethod::Quadrature ? kPhaseQuad1d : 0;
            return est;
        case MITermKind::JointToAllOutputs:
            est.value = phase_joint_all(p, &est.method);
            est.n_samples =
                est.method == MIMethod::Quadrature ? kPhaseQuad2d * kPhaseQuad2d : 0;
            return est;
        case MITermKind::SumAtRxPair:
            throw UnsupportedTermError("sum_at_rx_pair has no phase-fading closed form; use mc_mi");
    }
    throw std::invalid_argument("bad MITerm");
}

// ---------------------------------------------------------------------------
// generic log-det conditional MI
// ---------------------------------------------------------------------------

InputCovariance::InputCovariance(const Eigen::Matrix3cd& c) : m(c) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw std::invalid_argument("input covariance must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(m);
    if (es.eigenvalues().minCoeff() < -1e-9 * scale)
        throw std::invalid_argument("input covariance must be positive semidefinite");
    // clean tiny asymmetry so downstream Schur complements stay Hermitian
    m = 0.5 * (m + m.adjoint().eval());
}

InputCovariance InputCovariance::independent(double p1, double p2, double p3) {
    Eigen::Matrix3cd c = Eigen::Matrix3cd::Zero();
    c(0, 0) = p1;
    c(1, 1) = p2;
    c(2, 2) = p3;
    return InputCovariance(c);
}

namespace {

Eigen::Matrix3cd channel_matrix(const ChannelDraw& d) {
    Eigen::Matrix3cd g;
    g << d.h11, d.h21, d.h31, d.h12, d.h22, d.h32, d.h13, d.h23, cplx(0, 0);
    return g;
}

using Mat = Eigen::MatrixXcd;

Mat take(const Eigen::Matrix3cd& c, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat out(rows.size(), cols.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t l = 0; l < cols.size(); ++l) out(r, l) = c(rows[r], cols[l]);
    return out;
}

Mat pinv_hermitian(const Mat& a, bool* degenerate) {
    Eigen::SelfAdjointEigenSolver<Mat> es(a);
    const auto& ev = es.eigenvalues();
    const double tol = 1e-12 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    Eigen::VectorXd inv(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > tol) {
            inv(i) = 1.0 / ev(i);
        } else {
            inv(i) = 0.0;
            *degenerate = true;
        }
    }
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

// Conditional covariance of the `keep` inputs given the `cond` inputs.
Mat schur_complement(const Eigen::Matrix3cd& c, const std::vector<int>& keep,
                     const std::vector<int>& cond, bool* degenerate) {
    Mat a = take(c, keep, keep);
    if (cond.empty()) return a;
    const Mat b = take(c, keep, cond);
    const Mat d = take(c, cond, cond);
    return a - b * pinv_hermitian(d, degenerate) * b.adjoint();
}

double log2_det_noise_plus(const Eigen::Matrix3cd& g, const std::vector<int>& outputs,
                           const std::vector<int>& inputs, const Mat& k) {
    if (inputs.empty()) return 0;
    Mat gs(outputs.size(), inputs.size());
    for (size_t r = 0; r < outputs.size(); ++r)
        for (size_t l = 0; l < inputs.size(); ++l) gs(r, l) = g(outputs[r], inputs[l]);
    Mat m = Mat::Identity(outputs.size(), outputs.size()) + gs * k * gs.adjoint();
    const double det = std::max(m.determinant().real(), 1e-300);
    return std::log2(det);
}

}  // namespace

PreparedCondMI prepare_cond_mi(const InputCovariance& cov, const SubsetSpec& spec) {
    if (spec.interest.empty() || spec.outputs.empty())
        throw std::invalid_argument("interest and outputs must be nonempty");
    for (int i : spec.interest)
        for (int c : spec.conditioned)
            if (i == c) throw std::invalid_argument("interest and conditioned sets overlap");

    PreparedCondMI prep;
    prep.outputs = spec.outputs;
    for (int i = 0; i < 3; ++i) {
        bool cond = std::find(spec.conditioned.begin(), spec.conditioned.end(), i) !=
                    spec.conditioned.end();
        if (cond) continue;
        prep.rest.push_back(i);
        if (std::find(spec.interest.begin(), spec.interest.end(), i) == spec.interest.end())
            prep.stray.push_back(i);
    }
    prep.k_rest =
        schur_complement(cov.m, prep.rest, spec.conditioned, &prep.degenerate_conditioning);
    if (!prep.stray.empty()) {
        std::vector<int> given = spec.conditioned;
        given.insert(given.end(), spec.interest.begin(), spec.interest.end());
        std::sort(given.begin(), given.end());
        prep.k_stray =
            schur_complement(cov.m, prep.stray, given, &prep.degenerate_conditioning);
    }
    return prep;
}

double eval_cond_mi(const ChannelDraw& draw, const PreparedCondMI& prep) {
    const Eigen::Matrix3cd g = channel_matrix(draw);
    double bits = log2_det_noise_plus(g, prep.outputs, prep.rest, prep.k_rest);
    if (!prep.stray.empty())
        bits -= log2_det_noise_plus(g, prep.outputs, prep.stray, prep.k_stray);
    return bits;
}

CondMIResult gaussian_mi_conditional(const ChannelDraw& draw, const InputCovariance& cov,
                                     const SubsetSpec& spec) {
    const PreparedCondMI prep = prepare_cond_mi(cov, spec);
    return {eval_cond_mi(draw, prep), prep.degenerate_conditioning};
}

// ---------------------------------------------------------------------------
// Monte Carlo driver: fixed chunk grid, per-index seeds, order-independent
// ---------------------------------------------------------------------------

namespace {

constexpr int kMcChunks = 64;

struct ChunkStat {
    double sum = 0;
    double sumsq = 0;
};

template <class ValueAt>
MIEstimate mc_mean(long long n, int threads, ValueAt&& value_at) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<ChunkStat> stats(kMcChunks);
    auto run_chunk = [&](int c) {
        const long long lo = n * c / kMcChunks;
        const long long hi = n * (c + 1) / kMcChunks;
        ChunkStat s;
        for (long long i = lo; i < hi; ++i) {
            const double v = value_at(i);
            s.sum += v;
            s.sumsq += v * v;
        }
        stats[c] = s;
    };
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    if (n < 10000) nthreads = 1;
    nthreads = std::min(nthreads, kMcChunks);
    if (nthreads == 1) {
        for (int c = 0; c < kMcChunks; ++c) run_chunk(c);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                int c;
                while ((c = next.fetch_add(1)) < kMcChunks) run_chunk(c);
            });
        for (auto& t : pool) t.join();
    }
    double sum = 0, sumsq = 0;
    for (const auto& s : stats) {
        sum += s.sum;
        sumsq += s.sumsq;
    }
    MIEstimate est;
    est.method = MIMethod::MonteCarlo;
    est.n_samples = n;
    est.value = sum / n;
    const double var = n > 1 ? std::max(0.0, (sumsq - n * est.value * est.value) / (n - 1)) : 0.0;
    est.std_error = std::sqrt(var / n);
    return est;
}

}  // namespace

MIEstimate mc_mi(const SubsetSpec& spec, FadingModel model, const NetworkParams& params,
                 const InputCovariance& cov, const McSettings& mc, bool* degenerate) {
    params.validate();
    const PreparedCondMI prep = prepare_cond_mi(cov, spec);
    MIEstimate est = mc_mean(mc.samples, mc.threads, [&](long long i) {
        const ChannelDraw d = sample_channel(model, params, mc.seed, static_cast<std::uint64_t>(i));
        return eval_cond_mi(d, prep);
    });
    if (degenerate) *degenerate = prep.degenerate_conditioning;
    return est;
}

MIEstimate mc_mi(const MITerm& t, FadingModel model, const NetworkParams& params,
                 const InputCovariance& cov, const McSettings& mc) {
    return mc_mi(subset_for_term(t), model, params, cov, mc, nullptr);
}

// ---------------------------------------------------------------------------
// Rayleigh expectations
// ---------------------------------------------------------------------------

MIEstimate rayleigh_mi(const MITerm& t, const NetworkParams& p, const McSettings& mc) {
    p.validate();
    const LinkGains g = gains(p);
    const int k = t.k, j = t.j;
    MIEstimate est;
    est.method = MIMethod::Quadrature;
    est.n_samples = kGlPoints;
    switch (t.kind) {
        case MITermKind::DesiredWithRelay:
            require_pair_index(k, "k");
            est.value = expect_log2_sum2(g.c(k, k), g.c(3, k));
            if (g.c(k, k) == 0 || g.c(3, k) == 0) {
                est.method = MIMethod::ClosedForm;
                est.n_samples = 0;
            }
            return est;
        case MITermKind::CrossWithRelay:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = expect_log2_sum2(g.c(k, j), g.c(3, j));
            return est;
        case MITermKind::SourceToRx1AndRelay:
            require_pair_index(k, "k");
            est.value = expect_log2_sum2(g.c(k, 1), g.c(k, 3));
            return est;
        case MITermKind::SourceAtOppConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.method = MIMethod::ClosedForm;
            est.n_samples = 0;
            est.value = g.c(k, j) == 0 ? 0.0 : e1_scaled(1.0 / g.c(k, j)) / kLn2;
            return est;
        case MITermKind::InterfAsNoise:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = expect_log2_ratio(g.c(k, j), g.c(j, j), g.c(3, j));
            return est;
        case MITermKind::InterfConditioned:
            require_pair_index(k, "k");
            require_pair_index(j, "j");
            est.value = expect_log2_ratio(g.c(k, j), 0.0, g.c(3, j));
            return est;
        // Three or more exponential variables (or the complex cross term):
        // seeded Monte Carlo through the generic log-det path.
        case MITermKind::SumAll:
        case MITermKind::SourceToAllOutputs:
        case MITermKind::JointToRx1Relay:
        case MITermKind::JointToAllOutputs:
        case MITermKind::SumAtRxPair:
            return mc_mi(subset_for_term(t), FadingModel::Rayleigh, p,
                         InputCovariance::independent(p.p1, p.p2, p.p3), mc, nullptr);
    }
    throw std::invalid_argument("bad MITerm");
}

}  // namespace icrf
