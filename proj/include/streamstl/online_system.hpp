#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "streamstl/banded.hpp"

namespace streamstl {

/// First-difference reweighting: 1 / (2 * max(|tau - tau_prev|, floor)).
inline double first_diff_weight(double tau, double tau_prev, double weight_floor) {
    return 1.0 / (2.0 * std::max(std::abs(tau - tau_prev), weight_floor));
}

/// Second-difference reweighting: 1 / (2 * max(|tau - 2 tau_prev + tau_prev2|, floor)).
inline double second_diff_weight(double tau, double tau_prev, double tau_prev2,
                                 double weight_floor) {
    return 1.0 / (2.0 * std::max(std::abs(tau - 2.0 * tau_prev + tau_prev2), weight_floor));
}

/// Coefficients the interleaved online system contributes at one window
/// position j (unknown order tau_0, s_0, tau_1, s_1, ...). Couplings reach at
/// most two positions to the right, so the system has half-bandwidth 4.
struct PositionEntries {
    double tau_tau = 1.0;  ///< diagonal at tau_j
    double tau_s = 1.0;    ///< (tau_j, s_j)
    double s_s = 2.0;      ///< diagonal at s_j
    double tau_tau1 = 0.0; ///< (tau_j, tau_{j+1}), zero when j+1 >= M
    double tau_tau2 = 0.0; ///< (tau_j, tau_{j+2}), zero when j+2 >= M
};

/// Computes the entries for position j of an M-point window.
///
/// `w.p(r)` is the first-difference weight of the row coupling positions
/// (r, r+1), defined for r in [0, M-2]; `w.q(r)` the second-difference weight
/// of the row coupling (r, r+1, r+2), defined for r in [0, M-3]. Row r
/// carries the weight value appended at position r+1 (resp. r+2) — the
/// weight measuring that row's own difference. The accessor is only invoked
/// for rows that exist.
///
/// Every caller shares this accumulation order, so the engine's growth block
/// and the full window builder produce bit-identical coefficients.
template <class Weights>
PositionEntries position_entries(std::size_t j, std::size_t m_points, double lambda1,
                                 double lambda2, const Weights& w) {
    const std::size_t M = m_points;
    const auto has_p = [M](std::size_t r) { return r + 2 <= M; };
    const auto has_q = [M](std::size_t r) { return r + 3 <= M; };

    PositionEntries e;
    double diag = 1.0;
    if (j >= 1 && has_p(j - 1)) diag += lambda1 * w.p(j - 1);
    if (has_p(j)) diag += lambda1 * w.p(j);
    if (j >= 2 && has_q(j - 2)) diag += lambda2 * w.q(j - 2);
    if (j >= 1 && has_q(j - 1)) diag += lambda2 * (4.0 * w.q(j - 1));
    if (has_q(j)) diag += lambda2 * w.q(j);
    e.tau_tau = diag;

    double off1 = 0.0;
    if (has_p(j)) off1 -= lambda1 * w.p(j);
    if (j >= 1 && has_q(j - 1)) off1 -= 2.0 * (lambda2 * w.q(j - 1));
    if (has_q(j)) off1 -= 2.0 * (lambda2 * w.q(j));
    e.tau_tau1 = off1;

    e.tau_tau2 = has_q(j) ? lambda2 * w.q(j) : 0.0;
    return e;
}

/// Weight accessor over append-only per-position streams: `appended_*[t]` is
/// the pair recorded when window position t was processed. The first entry
/// (first two for q) is never consumed — it measures a difference reaching
/// before the window.
struct StreamWeights {
    const std::vector<double>& appended_p;
    const std::vector<double>& appended_q;
    double p(std::size_t r) const { return appended_p[r + 1]; }
    double q(std::size_t r) const { return appended_q[r + 2]; }
};

/// Half-bandwidth of the interleaved online system.
inline constexpr std::size_t kOnlineHalfBandwidth = 4;

/// Builds the full 2M x 2M interleaved online system matrix for an M-point
/// window with the given weight streams.
BandedSymMatrix build_online_matrix(std::size_t m_points, double lambda1, double lambda2,
                                    const StreamWeights& w);

/// Right-hand side of the online system: b[2j] = y_j, b[2j+1] = y_j + u_j,
/// where u_j is the seasonal anchor frozen when position j arrived.
std::vector<double> build_online_rhs(const std::vector<double>& y,
                                     const std::vector<double>& u);

/// Full online system (matrix + rhs) for tests and the reference solver.
struct OnlineSystem {
    BandedSymMatrix a;
    std::vector<double> b;
};

OnlineSystem build_online_system(const std::vector<double>& y, const std::vector<double>& u,
                                 double lambda1, double lambda2, const StreamWeights& w);

/// One (p, q) pair of reweighting values.
struct WeightPair {
    double p = 1.0;
    double q = 1.0;
    bool operator==(const WeightPair&) const = default;
};

/// The last three appended pairs, oldest first; exactly what the growth
/// block of the next point needs.
struct RecentWeights {
    WeightPair pairs[3];
    void push(WeightPair w) {
        pairs[0] = pairs[1];
        pairs[1] = pairs[2];
        pairs[2] = w;
    }
    bool operator==(const RecentWeights& o) const {
        return pairs[0] == o.pairs[0] && pairs[1] == o.pairs[1] && pairs[2] == o.pairs[2];
    }
};

/// Fills the coefficient side of the growth block for the current window
/// position m (0-based; the window now has M = m+1 points). `recent` must
/// hold the pairs appended at positions m-2, m-1, m. The coefficients depend
/// only on the weights and the lambdas, never on the seasonal buffer.
/// Requires m >= 4 so that every row the block covers is interior-or-trailing.
void fill_tail_coeffs(TailBlock& tb, std::size_t m, double lambda1, double lambda2,
                      const RecentWeights& recent);

/// Fills the right-hand-side entries of the growth block: positions m-2 and
/// m-1 reuse their frozen (y, u) pairs, position m contributes the fresh
/// observation and the seasonal read for the current point.
void fill_tail_rhs(TailBlock& tb, double y_m2, double u_m2, double y_m1, double u_m1,
                   double y_m, double u_m);

}  // namespace streamstl
