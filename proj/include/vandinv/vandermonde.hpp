#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vandinv/esp.hpp"
#include "vandinv/execution.hpp"
#include "vandinv/node_set.hpp"

namespace vandinv {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class InverseBackend {
    closed_form,           ///< per-entry formula from dropped-node ESPs
    wa_product,            ///< diag(lambda)^-1 * [v_i^{N-j}] times the Stanley matrix
    elimination_baseline,  ///< row-pivoted LU of the explicit Vandermonde matrix
};

inline constexpr InverseBackend kAllInverseBackends[] = {
    InverseBackend::closed_form, InverseBackend::wa_product, InverseBackend::elimination_baseline};

[[nodiscard]] std::string_view to_string(InverseBackend backend) noexcept;
/// Accepts "closed-form", "wa-product", "baseline". Throws ArgumentError otherwise.
[[nodiscard]] InverseBackend parse_inverse_backend(std::string_view name);

/// Threshold below which |lambda_k| is treated as singular.
inline constexpr double kSingularWeight = 1e-300;
/// Elimination pivots below this fraction of max|V| are treated as singular.
inline constexpr double kPivotTolerance = 1e-14;

/// Entry (r, c) = v_c^r (0-based): nodes run along columns, powers down rows.
/// `rows` defaults to N, giving the square matrix.
[[nodiscard]] Matrix build_vandermonde(const NodeSet& nodes, std::optional<std::size_t> rows = {});

/// lambda_k = prod_{j != k} (v_k - v_j).
struct BarycentricWeights {
    std::vector<Complex> lambdas;
};

/// Throws SingularityError when some |lambda_k| < 1e-300 and OverflowError when
/// a product is no longer finite.
[[nodiscard]] BarycentricWeights barycentric_weights(const NodeSet& nodes);

/// Unit-lower-triangular Toeplitz matrix of the monic nodal polynomial's
/// coefficients a_j = (-1)^j e_j, stored as a_0 = 1, a_1..a_{N-1}.
class StanleyMatrix {
public:
    explicit StanleyMatrix(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    /// a_j for 0 <= j <= N-1.
    [[nodiscard]] const Complex& coefficient(std::size_t j) const { return coeffs_.at(j); }
    [[nodiscard]] Matrix to_matrix() const;

private:
    std::vector<Complex> coeffs_;
};

[[nodiscard]] StanleyMatrix stanley_matrix(const NodeSet& nodes, EspMethod esp,
                                           ProposedOptions options = {});

/// An inverse together with how it was produced. `esp_backend` is empty for
/// the elimination baseline, which uses no ESPs.
struct InverseResult {
    Matrix matrix;
    std::optional<EspMethod> esp_backend;
    InverseBackend inverse_backend = InverseBackend::closed_form;
};

/// (V^-1)_{i,j} = (-1)^{N-j} e_{N-j}(v without v_i) / lambda_i for j < N and
/// 1 / lambda_i for j = N. One dropped-node ESP sweep per row; rows run in
/// parallel under Execution::parallel.
[[nodiscard]] InverseResult inverse_closed_form(const NodeSet& nodes, EspMethod esp,
                                                Execution exec = Execution::parallel,
                                                ProposedOptions options = {});

[[nodiscard]] InverseResult inverse_wa_product(const NodeSet& nodes, EspMethod esp,
                                               ProposedOptions options = {});

/// Throws SingularityError when a pivot falls below kPivotTolerance * max|V|.
[[nodiscard]] InverseResult inverse_elimination_baseline(const NodeSet& nodes);

/// Dispatch on the inverse backend. `esp` is ignored by the baseline.
[[nodiscard]] InverseResult invert(const NodeSet& nodes, InverseBackend backend, EspMethod esp,
                                   Execution exec = Execution::parallel);

/// Solves V^T c = rhs as c = (V^-1)^T rhs.
[[nodiscard]] Vector solve_dual(const NodeSet& nodes, std::span<const Complex> rhs,
                                InverseBackend backend, EspMethod esp);
[[nodiscard]] Vector solve_dual(const InverseResult& inverse, std::span<const Complex> rhs);

/// Real part of an inverse computed from real nodes. Throws ArgumentError if
/// any imaginary part exceeds 1e-12 * ||matrix||_F.
[[nodiscard]] Eigen::MatrixXd real_part_checked(const InverseResult& inverse);

}  // namespace vandinv
