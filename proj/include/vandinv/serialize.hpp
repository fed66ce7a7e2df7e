#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vandinv/esp.hpp"
#include "vandinv/interpolation.hpp"
#include "vandinv/node_set.hpp"
#include "vandinv/stability.hpp"
#include "vandinv/vandermonde.hpp"

namespace vandinv::io {

/// Shortest text with 17 significant digits ("%.17g"); "nan", "inf", "-inf"
/// for non-finite values.
[[nodiscard]] std::string format_double(double x);

/// index,re,im (1-based index).
void write_nodes_csv(std::ostream& out, const NodeSet& nodes);

/// n,j,re,im,abs for 0 <= j <= n, rows n = 1..N.
void write_esp_table_csv(std::ostream& out, const EspTable& table);

/// order,re,im,abs.
void write_esp_values_csv(std::ostream& out, std::span<const Complex> values);

/// One line per matrix row: row,c1_re,c1_im,c2_re,c2_im,...
void write_inverse_csv(std::ostream& out, const InverseResult& inverse);
/// {"esp_backend", "inverse_backend", "order", "matrix": [[[re, im], ...], ...]}
[[nodiscard]] nlohmann::json inverse_to_json(const InverseResult& inverse);

/// row,col,re,im,residual over the reconstructed block.
void write_companion_csv(std::ostream& out, const CompanionCheckReport& report);
[[nodiscard]] nlohmann::json companion_to_json(const CompanionCheckReport& report);

/// Long format: sigma_shift,sigma_mag,trial_mean_log10_nmse,failed_flag.
/// Header "N" then one column per combination label; NaN cells print as "nan".
void write_companion_table_csv(std::ostream& out, const CompanionTable& table);

void write_sweep_csv(std::ostream& out, const SweepGrid& grid);
[[nodiscard]] nlohmann::json sweep_to_json(const SweepGrid& grid);

/// index,node_re,node_im,pred_re,pred_im,ref_re,ref_im,residual,excluded.
void write_interp_csv(std::ostream& out, const InterpolationReport& report);
/// Header and value line of the one-record summary.
[[nodiscard]] std::string interp_summary_header();
[[nodiscard]] std::string interp_summary_line(const InterpolationReport& report);

}  // namespace vandinv::io
