#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vandinv/error.hpp"
#include "vandinv/esp.hpp"
#include "vandinv/execution.hpp"
#include "vandinv/nodes.hpp"
#include "vandinv/vandermonde.hpp"

namespace vandinv {

/// ||estimate - reference||_F / ||reference||_F.
/// Throws ArgumentError on shape mismatch or a zero reference.
template <class A, class B>
[[nodiscard]] double nmse(const Eigen::MatrixBase<A>& estimate, const Eigen::MatrixBase<B>& reference) {
    if (estimate.rows() != reference.rows() || estimate.cols() != reference.cols())
        throw ArgumentError("nmse: shape mismatch");
    const double denom = reference.norm();
    if (!(denom > 0.0)) throw ArgumentError("nmse: reference has zero norm");
    return (estimate - reference).norm() / denom;
}

[[nodiscard]] double nmse(std::span<const Complex> estimate, std::span<const Complex> reference);

struct CompanionCheckReport {
    std::size_t order = 0;
    double nmse = 0.0;
    /// Left N x (N-1) block of inv^T * diag(v) * V^T.
    Matrix reconstructed_block;
    /// |reconstructed - shifted identity| per entry.
    Eigen::MatrixXd residuals;
    std::optional<EspMethod> esp_backend;
    InverseBackend inverse_backend = InverseBackend::closed_form;
};

/// Frobenius-companion check: for an exact inverse, inv^T diag(v) V^T is the
/// companion matrix of prod (x - v_k), whose first N-1 columns are the
/// shifted identity (ones on the subdiagonal). Needs N >= 2.
[[nodiscard]] CompanionCheckReport companion_identity_nmse(const NodeSet& nodes,
                                                           const InverseResult& inverse);

/// One column of the companion table: an inverse backend paired with an ESP
/// backend. The ESP backend is ignored by the elimination baseline.
struct CompanionColumn {
    InverseBackend inverse = InverseBackend::closed_form;
    EspMethod esp = EspMethod::proposed;
};

/// "closed-form/proposed", "wa-product/traub", or plain "baseline".
[[nodiscard]] std::string companion_column_label(const CompanionColumn& column);
[[nodiscard]] CompanionColumn parse_companion_column(std::string_view label);

/// Four closed-form columns, one per ESP backend, followed by the baseline.
[[nodiscard]] std::vector<CompanionColumn> default_companion_columns();
[[nodiscard]] std::vector<std::size_t> default_companion_sizes();  ///< 5, 10, ..., 50

/// Companion NMSE on Nth roots of unity, one row per size and one column per
/// backend combination. Entries whose inversion raised a numerical error are NaN.
struct CompanionTable {
    std::vector<std::size_t> sizes;
    std::vector<CompanionColumn> columns;
    Eigen::MatrixXd nmse;

    [[nodiscard]] double at(std::size_t size_index, std::size_t column_index) const {
        return nmse(static_cast<Eigen::Index>(size_index), static_cast<Eigen::Index>(column_index));
    }
};

[[nodiscard]] CompanionTable companion_table(std::span<const std::size_t> sizes,
                                             std::span<const CompanionColumn> columns,
                                             Execution exec = Execution::parallel);

struct UnitCircleSample {
    std::size_t order = 0;
    Complex value;
    double magnitude = 0.0;
};

struct UnitCircleReport {
    std::size_t node_count = 0;
    std::size_t drop_index = 0;  ///< 0-based
    EspMethod esp_backend = EspMethod::proposed;
    std::vector<UnitCircleSample> samples;  ///< orders 0..N-1
    double max_deviation = 0.0;             ///< max | |sigma| - 1 |
    std::size_t distinct_points = 0;        ///< clusters at kClusterTolerance
};

inline constexpr double kClusterTolerance = 1e-6;

/// Number of clusters when points closer than `tolerance` to a cluster's
/// first member are merged.
[[nodiscard]] std::size_t count_distinct_points(std::span<const Complex> points,
                                                double tolerance = kClusterTolerance);

/// Dropped-node ESPs over the Nth roots of unity; exact values all have |sigma| = 1.
[[nodiscard]] UnitCircleReport esp_unit_circle_experiment(std::size_t count, std::size_t drop_index,
                                                          EspMethod esp);

/// {0, 0.05, ..., 0.35}.
[[nodiscard]] std::vector<double> default_sweep_axis();

struct SweepConfig {
    std::size_t node_count = 37;
    std::vector<double> shift_axis = default_sweep_axis();
    std::vector<double> mag_axis = default_sweep_axis();
    std::size_t trials = 16;
    std::uint64_t seed = 0;
    EspMethod esp = EspMethod::proposed;
    InverseBackend inverse = InverseBackend::closed_form;
    ShiftModel model = ShiftModel::phase;
    Execution exec = Execution::parallel;
};

struct SweepCell {
    double sigma_shift = 0.0;
    double sigma_mag = 0.0;
    double mean_nmse = 0.0;        ///< mean over trials that succeeded
    double log10_mean_nmse = 0.0;
    std::size_t failed_trials = 0;
    bool failed = false;           ///< every trial failed
};

struct SweepGrid {
    SweepConfig config;
    /// Row-major: cell (s, m) at index s * mag_axis.size() + m.
    std::vector<SweepCell> cells;

    [[nodiscard]] const SweepCell& at(std::size_t shift_index, std::size_t mag_index) const {
        return cells.at(shift_index * config.mag_axis.size() + mag_index);
    }
};

/// Mean companion NMSE over `trials` perturbed root-of-unity sets per cell.
/// Trial t of cell c draws its nodes with seed derive_seed(seed, c, t), so
/// serial and parallel runs produce identical grids.
[[nodiscard]] SweepGrid noise_sweep(const SweepConfig& config);

}  // namespace vandinv
