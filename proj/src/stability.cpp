#include "vandinv/stability.hpp"

#include <cmath>
#include <limits>

namespace vandinv {

double nmse(std::span<const Complex> estimate, std::span<const Complex> reference) {
    if (estimate.size() != reference.size()) throw ArgumentError("nmse: length mismatch");
    const Eigen::Map<const Vector> e(estimate.data(), static_cast<Eigen::Index>(estimate.size()));
    const Eigen::Map<const Vector> r(reference.data(), static_cast<Eigen::Index>(reference.size()));
    return nmse(e, r);
}

CompanionCheckReport companion_identity_nmse(const NodeSet& nodes, const InverseResult& inverse) {
    const auto n = static_cast<Eigen::Index>(nodes.size());
    if (inverse.matrix.rows() != n || inverse.matrix.cols() != n)
        throw ArgumentError("companion check: inverse is " + std::to_string(inverse.matrix.rows()) +
                            "x" + std::to_string(inverse.matrix.cols()) + " but there are " +
                            std::to_string(n) + " nodes");
    if (n < 2) throw ArgumentError("companion check needs at least two nodes");

    const Matrix v = build_vandermonde(nodes);
    const Eigen::Map<const Vector> lambda(nodes.values().data(), n);
    const Matrix m = inverse.matrix.transpose() * lambda.asDiagonal() * v.transpose();

    Matrix shifted = Matrix::Zero(n, n - 1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) shifted(k + 1, k) = 1.0;

    CompanionCheckReport report;
    report.order = nodes.size();
    report.reconstructed_block = m.leftCols(n - 1);
    report.residuals = (report.reconstructed_block - shifted).cwiseAbs();
    report.nmse = nmse(report.reconstructed_block, shifted);
    report.esp_backend = inverse.esp_backend;
    report.inverse_backend = inverse.inverse_backend;
    return report;
}

std::string companion_column_label(const CompanionColumn& column) {
    if (column.inverse == InverseBackend::elimination_baseline) return std::string(to_string(column.inverse));
    return std::string(to_string(column.inverse)) + "/" + std::string(to_string(column.esp));
}

CompanionColumn parse_companion_column(std::string_view label) {
    const auto slash = label.find('/');
    if (slash == std::string_view::npos) {
        const InverseBackend inverse = parse_inverse_backend(label);
        if (inverse != InverseBackend::elimination_baseline)
            throw ArgumentError("column '" + std::string(label) + "' needs an ESP backend, e.g. " +
                                std::string(label) + "/proposed");
        return {inverse, EspMethod::proposed};
    }
    return {parse_inverse_backend(label.substr(0, slash)), parse_esp_method(label.substr(slash + 1))};
}

std::vector<CompanionColumn> default_companion_columns() {
    std::vector<CompanionColumn> cols;
    for (auto m : kAllEspMethods) cols.push_back({InverseBackend::closed_form, m});
    cols.push_back({InverseBackend::elimination_baseline, EspMethod::proposed});
    return cols;
}

std::vector<std::size_t> default_companion_sizes() {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 5; n <= 50; n += 5) sizes.push_back(n);
    return sizes;
}

CompanionTable companion_table(std::span<const std::size_t> sizes, std::span<const CompanionColumn> columns,
                               Execution exec) {
    for (auto n : sizes)
        if (n < 2) throw ArgumentError("companion table sizes must be at least 2");
    CompanionTable table{{sizes.begin(), sizes.end()},
                         {columns.begin(), columns.end()},
                         Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(sizes.size()),
                                               static_cast<Eigen::Index>(columns.size()))};
    const auto cells = static_cast<std::ptrdiff_t>(sizes.size() * columns.size());
    const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t k = 0; k < cells; ++k) {
        const auto r = static_cast<std::size_t>(k) / columns.size();
        const auto c = static_cast<std::size_t>(k) % columns.size();
        double value = std::numeric_limits<double>::quiet_NaN();
        try {
            const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, sizes[r]});
            value = companion_identity_nmse(roots, invert(roots, columns[c].inverse, columns[c].esp,
                                                          Execution::serial))
                        .nmse;
        } catch (const Error&) {
        }
        table.nmse(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
    }
    return table;
}

std::size_t count_distinct_points(std::span<const Complex> points, double tolerance) {
    std::vector<Complex> centres;
    for (const auto& p : points) {
        bool matched = false;
        for (const auto& c : centres) {
            if (std::abs(p - c) < tolerance) {
                matched = true;
                break;
            }
        }
        if (!matched) centres.push_back(p);
    }
    return centres.size();
}

UnitCircleReport esp_unit_circle_experiment(std::size_t count, std::size_t drop_index, EspMethod esp) {
    if (count < 2) throw ArgumentError("unit-circle experiment needs N >= 2");
    const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, count});
    const auto values = esp_dropped(roots, drop_index, esp);

    UnitCircleReport report;
    report.node_count = count;
    report.drop_index = drop_index;
    report.esp_backend = esp;
    report.samples.reserve(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        const double mag = std::abs(values[n]);
        report.samples.push_back({n, values[n], mag});
        // NaN-propagating max, so a blown-up backend never reads as accurate.
        const double dev = std::abs(mag - 1.0);
        if (!(dev <= report.max_deviation)) report.max_deviation = dev;
    }
    report.distinct_points = count_distinct_points(values);
    return report;
}

std::vector<double> default_sweep_axis() {
    std::vector<double> axis(8);
    for (std::size_t k = 0; k < axis.size(); ++k) axis[k] = static_cast<double>(k) / 20.0;
    return axis;
}

namespace {

SweepCell run_cell(const SweepConfig& config, std::size_t cell_index, double shift, double mag) {
    SweepCell cell;
    cell.sigma_shift = shift;
    cell.sigma_mag = mag;
    double total = 0.0;
    std::size_t ok = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
        const PerturbationSpec spec{shift, mag, derive_seed(config.seed, cell_index, t), config.model};
        try {
            const NodeSet nodes = perturb_roots_of_unity(config.node_count, spec);
            // Cells are the parallel unit; each inversion runs serially.
            const auto inv = invert(nodes, config.inverse, config.esp, Execution::serial);
            const double e = companion_identity_nmse(nodes, inv).nmse;
            if (!std::isfinite(e)) {
                ++cell.failed_trials;
                continue;
            }
            total += e;
            ++ok;
        } catch (const Error&) {
            ++cell.failed_trials;
        }
    }
    if (ok == 0) {
        cell.failed = true;
        cell.mean_nmse = std::numeric_limits<double>::quiet_NaN();
        cell.log10_mean_nmse = std::numeric_limits<double>::quiet_NaN();
    } else {
        cell.mean_nmse = total / static_cast<double>(ok);
        cell.log10_mean_nmse = std::log10(cell.mean_nmse);
    }
    return cell;
}

}  // namespace

SweepGrid noise_sweep(const SweepConfig& config) {
    if (config.shift_axis.empty() || config.mag_axis.empty())
        throw ArgumentError("noise sweep axes must be non-empty");
    if (config.trials < 1) throw ArgumentError("noise sweep needs at least one trial");
    if (config.node_count < 2) throw ArgumentError("noise sweep needs N >= 2");
    for (const auto* axis : {&config.shift_axis, &config.mag_axis}) {
        for (double s : *axis) {
            if (!(std::isfinite(s) && s >= 0.0))
                throw ArgumentError("noise sweep axes must hold finite non-negative stds");
        }
    }

    SweepGrid grid;
    grid.config = config;
    const std::size_t mags = config.mag_axis.size();
    const std::size_t total = config.shift_axis.size() * mags;
    grid.cells.resize(total);

    if (config.exec == Execution::serial) {
        for (std::size_t c = 0; c < total; ++c)
            grid.cells[c] = run_cell(config, c, config.shift_axis[c / mags], config.mag_axis[c % mags]);
    } else {
        const auto cells = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < cells; ++i) {
            const auto c = static_cast<std::size_t>(i);
            grid.cells[c] = run_cell(config, c, config.shift_axis[c / mags], config.mag_axis[c % mags]);
        }
    }
    return grid;
}

}  // namespace vandinv
