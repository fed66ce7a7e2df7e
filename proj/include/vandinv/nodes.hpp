#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "vandinv/node_set.hpp"

namespace vandinv {

enum class NodeFamily { equidistant, chebyshev, extended_chebyshev, gauss_lobatto, roots_of_unity };

inline constexpr NodeFamily kAllNodeFamilies[] = {NodeFamily::equidistant, NodeFamily::chebyshev,
                                                  NodeFamily::extended_chebyshev,
                                                  NodeFamily::gauss_lobatto,
                                                  NodeFamily::roots_of_unity};

[[nodiscard]] std::string_view to_string(NodeFamily family) noexcept;
/// Accepts "equidistant", "chebyshev", "extended-chebyshev", "gauss-lobatto",
/// "roots-of-unity". Throws ArgumentError otherwise.
[[nodiscard]] NodeFamily parse_node_family(std::string_view name);

/// True for the four families living on [-1, 1].
[[nodiscard]] constexpr bool is_interval_family(NodeFamily family) noexcept {
    return family != NodeFamily::roots_of_unity;
}

struct NodeSpec {
    NodeFamily kind = NodeFamily::chebyshev;
    std::size_t count = 0;
};

/// k = 1..N:
///   equidistant          x_k = -1 + 2(k-1)/(N-1)
///   chebyshev            x_k = cos((2k-1) pi / 2N)
///   extended_chebyshev   chebyshev / cos(pi / 2N)
///   gauss_lobatto        x_k = cos((k-1) pi / (N-1))
///   roots_of_unity       v_k = exp(i 2 pi k / N)
/// Interval families need N >= 2, roots of unity N >= 1.
[[nodiscard]] NodeSet generate_nodes(const NodeSpec& spec);

/// How the shift noise enters the exponent of exp(i 2 pi n / N + eta_S).
enum class ShiftModel {
    phase,    ///< exp(i (2 pi n / N + eta_S)): moves nodes along the circle
    literal,  ///< exp(i 2 pi n / N + eta_S): scales the radius by e^{eta_S}
};

struct PerturbationSpec {
    double sigma_shift = 0.0;  ///< std of eta_S (radians under ShiftModel::phase)
    double sigma_mag = 0.0;    ///< total std of the complex additive offset eta_M
    std::uint64_t seed = 0;
    ShiftModel model = ShiftModel::phase;
};

/// Generator used by every seeded routine; recorded in CLI manifests.
inline constexpr std::string_view kRngAlgorithm = "std::mt19937_64 + std::normal_distribution";

/// Number of regeneration attempts after the first draw collapses two nodes.
inline constexpr int kPerturbationRetries = 8;

/// splitmix64 finalizer over (master, a, b); used for per-cell and per-trial seeds.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) noexcept;

/// v_n = exp(i (2 pi n / N + eta_S,n)) + eta_M,n, n = 1..N, with
/// eta_S ~ N(0, sigma_shift^2) and eta_M a circular complex Gaussian whose
/// real and imaginary parts each have variance sigma_mag^2 / 2.
/// Throws ArgumentError for N < 2, negative or non-finite stds, or when every
/// retry still produces coincident nodes.
[[nodiscard]] NodeSet perturb_roots_of_unity(std::size_t count, const PerturbationSpec& spec);

}  // namespace vandinv
