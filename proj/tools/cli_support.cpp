#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "vandinv/error.hpp"
#include "vandinv/nodes.hpp"
#include "vandinv/stability.hpp"

namespace vandinv::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view text, std::string_view whole) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    if (text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ArgumentError("cannot parse number '" + std::string(whole) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const std::string_view whole = trim(text);
    std::string_view s = whole;
    if (s.empty()) throw ArgumentError("empty node value");
    if (s.back() != 'i' && s.back() != 'j') {
        const double re = parse_real(s, whole);
        if (s == "+" || s == "-") throw ArgumentError("cannot parse number '" + std::string(whole) + "'");
        return {re, 0.0};
    }
    s.remove_suffix(1);
    // The split point is the last sign that is not part of an exponent.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string_view::npos) return {0.0, parse_real(s, whole)};
    const std::string_view re_part = s.substr(0, split_at);
    if (re_part.empty() || re_part == "+" || re_part == "-")
        throw ArgumentError("cannot parse number '" + std::string(whole) + "'");
    return {parse_real(re_part, whole), parse_real(s.substr(split_at), whole)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> values;
    for (auto part : split(text, ',')) values.push_back(parse_complex(part));
    return values;
}

std::vector<double> parse_axis(std::string_view text) {
    if (trim(text) == "default") return default_sweep_axis();
    std::vector<double> axis;
    for (auto part : split(text, ',')) {
        const double v = parse_real(part.empty() ? std::string_view("x") : part, part);
        if (!(v >= 0.0) || !std::isfinite(v)) throw ArgumentError("axis values must be finite and non-negative");
        axis.push_back(v);
    }
    return axis;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    auto to_size = [](std::string_view s) {
        std::size_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || v == 0)
            throw ArgumentError("expected a positive integer, got '" + std::string(s) + "'");
        return v;
    };
    std::vector<std::size_t> sizes;
    for (auto part : split(text, ',')) {
        const auto range = split(part, ':');
        if (range.size() == 1) {
            sizes.push_back(to_size(range[0]));
        } else if (range.size() == 3) {
            const auto lo = to_size(range[0]), hi = to_size(range[1]), step = to_size(range[2]);
            for (auto n = lo; n <= hi; n += step) sizes.push_back(n);
        } else {
            throw ArgumentError("ranges are written lo:hi:step");
        }
    }
    return sizes;
}

std::filesystem::path resolve_output(const std::string& name) {
    const std::filesystem::path p(name);
    if (p.is_absolute() || p.has_parent_path()) return p;
    const char* dir = std::getenv(kOutDirEnv);
    if (dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        return std::filesystem::path(dir) / p;
    }
    return p;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::string& command, const nlohmann::json& parameters,
                    const std::vector<std::filesystem::path>& outputs, const nlohmann::json& seed) {
    if (outputs.empty()) return;
    nlohmann::json paths = nlohmann::json::array();
    for (const auto& p : outputs) paths.push_back(p.string());
    const nlohmann::json manifest{{"command", command},
                                  {"parameters", parameters},
                                  {"seed", seed},
                                  {"rng", std::string(kRngAlgorithm)},
                                  {"version", VANDINV_VERSION},
                                  {"timestamp", utc_timestamp()},
                                  {"outputs", paths}};
    std::filesystem::path target = outputs.front();
    target += ".manifest.json";
    std::ofstream out(target, std::ios::binary);
    if (!out) throw ArgumentError("cannot write manifest " + target.string());
    out << manifest.dump(2) << '\n';
}

}  // namespace vandinv::cli
