#include "vandinv/serialize.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace vandinv::io {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string esp_label(const std::optional<EspMethod>& esp) {
    return esp ? std::string(to_string(*esp)) : std::string("none");
}

nlohmann::json json_number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

nlohmann::json json_complex(const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

void write_nodes_csv(std::ostream& out, const NodeSet& nodes) {
    out << "index,re,im\r\n";
    for (std::size_t k = 0; k < nodes.size(); ++k)
        out << (k + 1) << ',' << format_double(nodes[k].real()) << ',' << format_double(nodes[k].imag())
            << "\r\n";
}

void write_esp_table_csv(std::ostream& out, const EspTable& table) {
    out << "n,j,re,im,abs\r\n";
    for (std::size_t n = 1; n <= table.order(); ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Complex z = table.at(n, j);
            out << n << ',' << j << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
                << format_double(std::abs(z)) << "\r\n";
        }
    }
}

void write_esp_values_csv(std::ostream& out, std::span<const Complex> values) {
    out << "order,re,im,abs\r\n";
    for (std::size_t n = 0; n < values.size(); ++n)
        out << n << ',' << format_double(values[n].real()) << ',' << format_double(values[n].imag()) << ','
            << format_double(std::abs(values[n])) << "\r\n";
}

void write_inverse_csv(std::ostream& out, const InverseResult& inverse) {
    const auto& m = inverse.matrix;
    out << "row";
    for (Eigen::Index c = 1; c <= m.cols(); ++c) out << ",c" << c << "_re,c" << c << "_im";
    out << "\r\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << (r + 1);
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << ',' << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
        out << "\r\n";
    }
}

nlohmann::json inverse_to_json(const InverseResult& inverse) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < inverse.matrix.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < inverse.matrix.cols(); ++c) row.push_back(json_complex(inverse.matrix(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"esp_backend", esp_label(inverse.esp_backend)},
            {"inverse_backend", std::string(to_string(inverse.inverse_backend))},
            {"order", inverse.matrix.rows()},
            {"matrix", std::move(rows)}};
}

void write_companion_csv(std::ostream& out, const CompanionCheckReport& report) {
    out << "row,col,re,im,residual\r\n";
    const auto& b = report.reconstructed_block;
    for (Eigen::Index r = 0; r < b.rows(); ++r) {
        for (Eigen::Index c = 0; c < b.cols(); ++c)
            out << (r + 1) << ',' << (c + 1) << ',' << format_double(b(r, c).real()) << ','
                << format_double(b(r, c).imag()) << ',' << format_double(report.residuals(r, c)) << "\r\n";
    }
}

nlohmann::json companion_to_json(const CompanionCheckReport& report) {
    nlohmann::json block = nlohmann::json::array();
    for (Eigen::Index r = 0; r < report.reconstructed_block.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < report.reconstructed_block.cols(); ++c)
            row.push_back(json_complex(report.reconstructed_block(r, c)));
        block.push_back(std::move(row));
    }
    return {{"order", report.order},
            {"nmse", json_number(report.nmse)},
            {"esp_backend", esp_label(report.esp_backend)},
            {"inverse_backend", std::string(to_string(report.inverse_backend))},
            {"reconstructed_block", std::move(block)}};
}

void write_companion_table_csv(std::ostream& out, const CompanionTable& table) {
    out << 'N';
    for (const auto& col : table.columns) out << ',' << companion_column_label(col);
    out << "\r\n";
    for (std::size_t r = 0; r < table.sizes.size(); ++r) {
        out << table.sizes[r];
        for (std::size_t c = 0; c < table.columns.size(); ++c) out << ',' << format_double(table.at(r, c));
        out << "\r\n";
    }
}

void write_sweep_csv(std::ostream& out, const SweepGrid& grid) {
    out << "sigma_shift,sigma_mag,trial_mean_log10_nmse,failed_flag\r\n";
    for (const auto& cell : grid.cells)
        out << format_double(cell.sigma_shift) << ',' << format_double(cell.sigma_mag) << ','
            << format_double(cell.log10_mean_nmse) << ',' << (cell.failed ? 1 : 0) << "\r\n";
}

nlohmann::json sweep_to_json(const SweepGrid& grid) {
    const auto& cfg = grid.config;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : grid.cells) {
        cells.push_back({{"sigma_shift", cell.sigma_shift},
                         {"sigma_mag", cell.sigma_mag},
                         {"mean_nmse", json_number(cell.mean_nmse)},
                         {"trial_mean_log10_nmse", json_number(cell.log10_mean_nmse)},
                         {"failed_trials", cell.failed_trials},
                         {"failed", cell.failed}});
    }
    return {{"node_count", cfg.node_count},
            {"trials_per_cell", cfg.trials},
            {"seed", cfg.seed},
            {"esp_backend", std::string(to_string(cfg.esp))},
            {"inverse_backend", std::string(to_string(cfg.inverse))},
            {"shift_model", cfg.model == ShiftModel::phase ? "phase" : "literal"},
            {"sigma_shift_axis", cfg.shift_axis},
            {"sigma_mag_axis", cfg.mag_axis},
            {"cells", std::move(cells)}};
}

void write_interp_csv(std::ostream& out, const InterpolationReport& report) {
    out << "index,node_re,node_im,pred_re,pred_im,ref_re,ref_im,residual,excluded\r\n";
    const auto size = static_cast<std::size_t>(report.evaluations.size());
    const std::size_t k = report.excluded_count_per_side;
    for (std::size_t i = 0; i < size; ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        const Complex p = report.evaluations(idx);
        const Complex r = report.reference(idx);
        const bool excluded = i < k || i >= size - k;
        out << (i + 1) << ',' << format_double(report.dense_nodes[i].real()) << ','
            << format_double(report.dense_nodes[i].imag()) << ',' << format_double(p.real()) << ','
            << format_double(p.imag()) << ',' << format_double(r.real()) << ',' << format_double(r.imag())
            << ',' << format_double(std::abs(p - r)) << ',' << (excluded ? 1 : 0) << "\r\n";
    }
}

std::string interp_summary_header() {
    return "function,t,family,n,esp_backend,inverse_backend,excluded_per_side,nmse,log10_nmse,nmse_full";
}

std::string interp_summary_line(const InterpolationReport& report) {
    const auto& c = report.config;
    return std::string(to_string(c.function.kind)) + ',' + format_double(c.function.t) + ',' +
           std::string(to_string(c.family)) + ',' + std::to_string(c.count) + ',' +
           std::string(to_string(c.esp)) + ',' + std::string(to_string(c.inverse)) + ',' +
           std::to_string(report.excluded_count_per_side) + ',' + format_double(report.nmse_after_exclusion) +
           ',' + format_double(std::log10(report.nmse_after_exclusion)) + ',' + format_double(report.nmse_full);
}

}  // namespace vandinv::io
