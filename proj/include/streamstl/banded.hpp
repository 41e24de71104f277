#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "streamstl/errors.hpp"

namespace streamstl {

/// Symmetric banded matrix, lower triangle stored as packed row-major
/// diagonals: row i keeps columns [i - beta, i]. Entries outside the band are
/// identically zero by construction.
class BandedSymMatrix {
public:
    BandedSymMatrix(std::size_t dim, std::size_t half_bandwidth)
        : dim_(dim),
          beta_(half_bandwidth),
          data_(dim * (half_bandwidth + 1), 0.0) {}

    std::size_t dim() const { return dim_; }
    std::size_t half_bandwidth() const { return beta_; }

    double at(std::size_t i, std::size_t j) const {
        if (j > i) std::swap(i, j);
        if (i - j > beta_) return 0.0;
        return data_[i * (beta_ + 1) + (beta_ + j - i)];
    }

    /// Mutable access to a stored lower-triangle entry (j <= i, i - j <= beta).
    double& lower(std::size_t i, std::size_t j) {
        return data_[i * (beta_ + 1) + (beta_ + j - i)];
    }

private:
    std::size_t dim_;
    std::size_t beta_;
    std::vector<double> data_;
};

/// A = L D L^T with unit lower-triangular banded L and positive diagonal D.
/// The strictly-lower band of L is packed row-major: row i keeps columns
/// [i - beta, i - 1].
struct LDLFactors {
    std::size_t dim = 0;
    std::size_t half_bandwidth = 0;
    std::vector<double> d;
    std::vector<double> l;

    double& l_ref(std::size_t i, std::size_t j) {
        return l[i * half_bandwidth + (j + half_bandwidth - i)];
    }
    double l_entry(std::size_t i, std::size_t j) const {
        return l[i * half_bandwidth + (j + half_bandwidth - i)];
    }
    /// L(i, j) including the implicit unit diagonal and out-of-band zeros.
    double l_at(std::size_t i, std::size_t j) const {
        if (i == j) return 1.0;
        if (j > i || i - j > half_bandwidth) return 0.0;
        return l_entry(i, j);
    }
};

/// Pivot acceptance floor, scaled so that genuine singularity is
/// distinguished from round-off.
inline double pivot_floor(double diag_entry) {
    const double mag = diag_entry < 0.0 ? -diag_entry : diag_entry;
    return 1e-12 * (mag > 1.0 ? mag : 1.0);
}

/// Symmetric Doolittle (LDL^T) factorization restricted to the band.
/// Throws NonPositivePivot when a pivot falls at or below the floor,
/// signalling a singular or indefinite system.
LDLFactors sdf_factorize(const BandedSymMatrix& a);

/// In-place forward substitution: b <- z where L z = b.
void forward_substitute(const LDLFactors& f, std::span<double> b);

/// Solves A x = b from the factorization: forward substitution, diagonal
/// scaling, backward substitution. Throws DimensionMismatch.
std::vector<double> banded_solve(const LDLFactors& f, std::vector<double> b);

/// Bottom-right growth block of the online system when one time point is
/// appended: the (beta + 2) x (beta + 2) coefficient block covering the two
/// new rows plus the rows whose entries the new point changed, and the raw
/// right-hand-side entries for the same rows.
struct TailBlock {
    std::size_t rows = 0; ///< beta + 2
    std::vector<double> a; ///< rows x rows, row-major, symmetric
    std::vector<double> b;

    void resize(std::size_t r) {
        rows = r;
        a.assign(r * r, 0.0);
        b.assign(r, 0.0);
    }
    double& at(std::size_t i, std::size_t j) { return a[i * rows + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * rows + j]; }
};

/// Fixed-size trailing state of the factorization of a growing banded system.
///
/// Carries the last `beta` committed columns of L over the rows that can
/// still interact with future rows (a 2*beta x beta block), the matching
/// diagonal block of D and the partially forward-substituted right-hand side.
/// One `step` extends the factorization by the two rows of a new time point,
/// redoes the `beta` provisional rows the new point altered, and reads the
/// last two solution entries off a truncated backward substitution. The work
/// per step is a fixed constant, independent of how many rows have been
/// absorbed. Value type: copies are deep and independent.
class OnlineLdltState {
public:
    OnlineLdltState() = default;

    /// Seeds the state from a full factorization (and forward-substituted
    /// right-hand side z) of the current system, as if the factorization had
    /// been running incrementally all along. Requires f.dim >= 2*beta.
    OnlineLdltState(const LDLFactors& f, std::span<const double> z);

    std::size_t half_bandwidth() const { return beta_; }
    std::uint64_t rows_emitted() const { return rows_emitted_; }
    std::uint64_t op_count() const { return ops_; }

    /// Absorbs the growth block of one new time point and returns the last
    /// two entries of the exact solution of the extended system:
    /// (second-to-last, last).
    std::pair<double, double> step(const TailBlock& tb);

    bool operator==(const OnlineLdltState&) const = default;

    // Serialized representation accessors.
    const std::vector<double>& l_block() const { return l_; }
    const std::vector<double>& d_block() const { return d_; }
    const std::vector<double>& z_block() const { return z_; }
    static OnlineLdltState restore(std::size_t beta, std::uint64_t rows_emitted,
                                   std::uint64_t ops, std::vector<double> l,
                                   std::vector<double> d, std::vector<double> z);

private:
    std::size_t beta_ = 0;
    std::uint64_t rows_emitted_ = 0;
    std::uint64_t ops_ = 0;
    std::vector<double> l_; ///< (2*beta) x beta, row-major
    std::vector<double> d_; ///< beta
    std::vector<double> z_; ///< beta

    // step() scratch, excluded from comparison/serialization
    struct Scratch {
        std::vector<double> lw, dw, zw;
        bool operator==(const Scratch&) const { return true; }
    };
    mutable Scratch scratch_;
};

}  // namespace streamstl
