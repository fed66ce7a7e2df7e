#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vandinv/esp.hpp"
#include "vandinv/nodes.hpp"
#include "vandinv/vandermonde.hpp"

namespace vandinv {

enum class FunctionKind { cosine, tanh, exponential };

[[nodiscard]] std::string_view to_string(FunctionKind kind) noexcept;
/// Accepts "cos", "tanh", "exp".
[[nodiscard]] FunctionKind parse_function_kind(std::string_view name);

/// cos(2 pi t x), tanh(t x) or exp(t x), evaluated as complex analytic functions.
struct InterpFunctionSpec {
    FunctionKind kind = FunctionKind::cosine;
    double t = 2.0;
};

/// t = 2 for the cosine, 1 for tanh and exp.
[[nodiscard]] double default_parameter(FunctionKind kind) noexcept;

[[nodiscard]] std::vector<Complex> sample_function(const InterpFunctionSpec& spec, const NodeSet& nodes);

struct CoefficientFit {
    Vector coefficients;  ///< c_0..c_{N-1}, ascending powers
    InverseBackend inverse_backend = InverseBackend::closed_form;
    std::optional<EspMethod> esp_backend;
};

/// Solves V^T c = samples through the chosen inverse.
[[nodiscard]] CoefficientFit fit_coefficients(const NodeSet& nodes, std::span<const Complex> samples,
                                              InverseBackend inverse, EspMethod esp);

/// Evaluates sum_k c_k x^k at the 2N dense nodes as Vd^T c, Vd the N x 2N
/// rectangular Vandermonde. Throws ArgumentError unless dense count = 2N.
[[nodiscard]] Vector evaluate_superresolved(const Vector& coefficients, const NodeSet& dense_nodes);

/// Boundary points dropped on each side for the interval families.
inline constexpr std::size_t kDefaultBoundaryExclusion = 7;

struct InterpConfig {
    InterpFunctionSpec function;
    NodeFamily family = NodeFamily::chebyshev;
    std::size_t count = 37;
    InverseBackend inverse = InverseBackend::closed_form;
    EspMethod esp = EspMethod::proposed;
    std::size_t exclude_per_side = kDefaultBoundaryExclusion;
};

struct InterpolationReport {
    InterpConfig config;
    std::vector<Complex> fit_nodes;
    std::vector<Complex> dense_nodes;
    Vector coefficients;
    Vector evaluations;  ///< length 2N
    Vector reference;    ///< true values at the dense nodes
    double nmse_after_exclusion = 0.0;
    double nmse_full = 0.0;
    std::size_t excluded_count_per_side = 0;  ///< 0 for roots of unity
};

/// NMSE over reference[k..size-k), i.e. with k points excluded per side.
[[nodiscard]] double nmse_excluding(const Vector& estimate, const Vector& reference, std::size_t per_side);

/// Fit on N nodes, evaluate on the same family regenerated with 2N nodes,
/// report the NMSE with boundary exclusion (interval families) or over the
/// whole set (roots of unity). Throws ArgumentError if fewer than two points remain.
[[nodiscard]] InterpolationReport interp_experiment(const InterpConfig& config);

}  // namespace vandinv
