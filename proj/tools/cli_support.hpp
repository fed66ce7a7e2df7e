#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vandinv/node_set.hpp"

namespace vandinv::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutDirEnv = "VANDINV_OUT_DIR";

/// Parses "3", "-1.5", "2i", "-i", "1+2i", "0.5-1e-3j".
[[nodiscard]] Complex parse_complex(std::string_view text);

/// Comma-separated complex values.
[[nodiscard]] std::vector<Complex> parse_complex_list(std::string_view text);

/// Comma-separated non-negative reals, or "default" for the standard sweep axis.
[[nodiscard]] std::vector<double> parse_axis(std::string_view text);

/// Comma-separated positive integers; "a:b:step" ranges are accepted as items.
[[nodiscard]] std::vector<std::size_t> parse_size_list(std::string_view text);

/// Resolves an output path: absolute or explicitly relative paths pass through,
/// bare file names land in $VANDINV_OUT_DIR (or the working directory).
[[nodiscard]] std::filesystem::path resolve_output(const std::string& name);

[[nodiscard]] std::string utc_timestamp();

/// Writes `<output>.manifest.json` beside the first output.
void write_manifest(const std::string& command, const nlohmann::json& parameters,
                    const std::vector<std::filesystem::path>& outputs,
                    const nlohmann::json& seed = nullptr);

}  // namespace vandinv::cli
