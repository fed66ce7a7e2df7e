#include "vandinv/interpolation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vandinv/error.hpp"
#include "vandinv/stability.hpp"

namespace vandinv {

std::string_view to_string(FunctionKind kind) noexcept {
    switch (kind) {
        case FunctionKind::cosine: return "cos";
        case FunctionKind::tanh: return "tanh";
        case FunctionKind::exponential: return "exp";
    }
    return "unknown";
}

FunctionKind parse_function_kind(std::string_view name) {
    for (auto k : {FunctionKind::cosine, FunctionKind::tanh, FunctionKind::exponential}) {
        if (to_string(k) == name) return k;
    }
    throw ArgumentError("unknown function '" + std::string(name) + "' (expected cos, tanh or exp)");
}

double default_parameter(FunctionKind kind) noexcept {
    return kind == FunctionKind::cosine ? 2.0 : 1.0;
}

std::vector<Complex> sample_function(const InterpFunctionSpec& spec, const NodeSet& nodes) {
    if (!std::isfinite(spec.t)) throw ArgumentError("function parameter t must be finite");
    std::vector<Complex> out;
    out.reserve(nodes.size());
    for (const auto& x : nodes) {
        switch (spec.kind) {
            case FunctionKind::cosine: out.push_back(std::cos(2.0 * std::numbers::pi * spec.t * x)); break;
            case FunctionKind::tanh: out.push_back(std::tanh(spec.t * x)); break;
            case FunctionKind::exponential: out.push_back(std::exp(spec.t * x)); break;
        }
    }
    return out;
}

CoefficientFit fit_coefficients(const NodeSet& nodes, std::span<const Complex> samples,
                                InverseBackend inverse, EspMethod esp) {
    if (samples.size() != nodes.size())
        throw ArgumentError("sample count " + std::to_string(samples.size()) +
                            " does not match node count " + std::to_string(nodes.size()));
    const auto inv = invert(nodes, inverse, esp);
    return {solve_dual(inv, samples), inv.inverse_backend, inv.esp_backend};
}

Vector evaluate_superresolved(const Vector& coefficients, const NodeSet& dense_nodes) {
    const auto n = static_cast<std::size_t>(coefficients.size());
    if (dense_nodes.size() != 2 * n)
        throw ArgumentError("dense node count " + std::to_string(dense_nodes.size()) +
                            " must be twice the coefficient count " + std::to_string(n));
    const Matrix vd = build_vandermonde(dense_nodes, n);
    return vd.transpose() * coefficients;
}

double nmse_excluding(const Vector& estimate, const Vector& reference, std::size_t per_side) {
    if (estimate.size() != reference.size()) throw ArgumentError("nmse: length mismatch");
    const auto size = static_cast<std::size_t>(reference.size());
    if (size < 2 * per_side + 2)
        throw ArgumentError("boundary exclusion of " + std::to_string(per_side) +
                            " per side leaves fewer than two points");
    const auto k = static_cast<Eigen::Index>(per_side);
    const auto len = static_cast<Eigen::Index>(size - 2 * per_side);
    return nmse(estimate.segment(k, len), reference.segment(k, len));
}

InterpolationReport interp_experiment(const InterpConfig& config) {
    const std::size_t per_side = is_interval_family(config.family) ? config.exclude_per_side : 0;
    if (2 * config.count < 2 * per_side + 2)
        throw ArgumentError("N = " + std::to_string(config.count) + " is too small for excluding " +
                            std::to_string(per_side) + " dense nodes per side");

    const NodeSet fit_nodes = generate_nodes({config.family, config.count});
    const NodeSet dense_nodes = generate_nodes({config.family, 2 * config.count});
    const auto samples = sample_function(config.function, fit_nodes);
    const auto truth = sample_function(config.function, dense_nodes);

    InterpolationReport report;
    report.config = config;
    report.fit_nodes.assign(fit_nodes.begin(), fit_nodes.end());
    report.dense_nodes.assign(dense_nodes.begin(), dense_nodes.end());
    report.coefficients = fit_coefficients(fit_nodes, samples, config.inverse, config.esp).coefficients;
    report.evaluations = evaluate_superresolved(report.coefficients, dense_nodes);
    report.reference = Eigen::Map<const Vector>(truth.data(), static_cast<Eigen::Index>(truth.size()));
    report.excluded_count_per_side = per_side;
    report.nmse_full = nmse(report.evaluations, report.reference);
    report.nmse_after_exclusion = nmse_excluding(report.evaluations, report.reference, per_side);
    return report;
}

}  // namespace vandinv
