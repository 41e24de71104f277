#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "streamstl/errors.hpp"

namespace streamstl {

/// All hyper-parameters of the decomposition engine.
///
/// `period` and `init_len` have no useful defaults and must be set by the
/// caller; everything else defaults to the values used throughout the
/// experiments in this repo.
struct Config {
    std::size_t period = 0;        ///< T, samples per seasonal cycle (>= 2)
    std::size_t shift_window = 20; ///< H, max |shift| searched on anomalies (< T)
    double lambda1 = 100.0;        ///< first-difference trend weight (>= 0)
    double lambda2 = 100.0;        ///< second-difference trend weight (>= 0)
    std::size_t max_iters = 8;     ///< I, reweighting iterations (>= 1)
    double nsigma_n = 5.0;         ///< anomaly threshold in std units (> 0)
    std::size_t init_len = 0;      ///< t0, points consumed by initialization (>= 2*T)
    double ridge = 1e-8;           ///< per-sample batch degeneracy regularizer (>= 0);
                                   ///< the batch solve applies ridge * N
    double weight_floor = 1e-10;   ///< denominator floor inside the reweighting (> 0)
};

/// A Config whose invariants have been checked. Immutable value type.
class ValidatedConfig {
public:
    const Config& get() const { return cfg_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    std::size_t period() const { return cfg_.period; }
    std::size_t shift_window() const { return cfg_.shift_window; }
    double lambda1() const { return cfg_.lambda1; }
    double lambda2() const { return cfg_.lambda2; }
    std::size_t max_iters() const { return cfg_.max_iters; }
    double nsigma_n() const { return cfg_.nsigma_n; }
    std::size_t init_len() const { return cfg_.init_len; }
    double ridge() const { return cfg_.ridge; }
    double weight_floor() const { return cfg_.weight_floor; }

private:
    friend ValidatedConfig validate_config(const Config& cfg);
    ValidatedConfig(const Config& cfg, std::vector<std::string> warnings)
        : cfg_(cfg), warnings_(std::move(warnings)) {}

    Config cfg_;
    std::vector<std::string> warnings_;
};

/// Checks every Config invariant; throws InvalidConfig naming the violated
/// constraint. A too-short (but legal) init_len < 4*T produces a warning on
/// the returned object instead of an error.
ValidatedConfig validate_config(const Config& cfg);

/// Re-validating an already validated config returns it unchanged.
inline ValidatedConfig validate_config(const ValidatedConfig& cfg) { return cfg; }

/// Per-timestamp decomposition output. `trend + seasonal + residual`
/// reconstructs the input exactly (the residual is defined by subtraction).
struct DecompPoint {
    double trend = 0.0;
    double seasonal = 0.0;
    double residual = 0.0;
    long shift = 0; ///< phase adjustment selected at this point, 0 when none
};

/// An in-memory series: finite values, optional strictly increasing timestamps.
struct TimeSeries {
    std::vector<double> values;
    std::optional<std::vector<std::int64_t>> timestamps;
};

}  // namespace streamstl
