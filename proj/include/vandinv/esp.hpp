#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "vandinv/node_set.hpp"

namespace vandinv {

/// Elementary symmetric polynomial algorithms. Every backend returns the
/// unordered value e_n(v) = sum over size-n subsets of the product of the subset.
enum class EspMethod {
    proposed,  ///< balanced per-order recursion over all nodes (C_{n-1} / n!)
    traub,     ///< sigma_{n,j} = sigma_{n-1,j} + v_n sigma_{n-1,j-1}
    yang,      ///< sum over runs of trailing nodes
    mikkawy,   ///< first-node-removed recursion, node swapped into slot 1
};

inline constexpr EspMethod kAllEspMethods[] = {EspMethod::proposed, EspMethod::traub,
                                               EspMethod::yang, EspMethod::mikkawy};

[[nodiscard]] std::string_view to_string(EspMethod method) noexcept;
/// Accepts the names printed by to_string. Throws ArgumentError otherwise.
[[nodiscard]] EspMethod parse_esp_method(std::string_view name);

/// Knobs for the proposed recursion.
struct ProposedOptions {
    /// Divide f_i and C_i by (i+1) every step so n! is absorbed incrementally.
    /// Lifts the n <= 170 limit of the faithful mode.
    bool scaled = false;
    /// Neumaier-compensated accumulation of C_i.
    bool compensated = false;
};

/// Largest order the unscaled proposed recursion accepts (170! is the last finite double factorial).
inline constexpr std::size_t kMaxUnscaledOrder = 170;

/// Lower-triangular table: entry (n, j) = e_j over the first n nodes,
/// 0 <= j <= n <= N. Row 0 holds the empty-set value e_0 = 1.
class EspTable {
public:
    explicit EspTable(std::size_t order);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    /// Entries with j > n read as zero.
    [[nodiscard]] Complex at(std::size_t n, std::size_t j) const;
    [[nodiscard]] Complex& ref(std::size_t n, std::size_t j);
    /// Row n as e_0..e_n.
    [[nodiscard]] std::span<const Complex> row(std::size_t n) const;

private:
    [[nodiscard]] static std::size_t offset(std::size_t n) noexcept { return n * (n + 1) / 2; }

    std::size_t order_;
    std::vector<Complex> entries_;
};

/// e_n over all nodes via the balanced recursion
///   f_0(v) = v,  f_i(v_d) = v_d [C_{i-1} - (n - i) f_{i-1}(v_d)],  C_i = sum_d f_i(v_d),
/// returning C_{n-1} / n!. Costs O(N n). n = 0 returns 1.
/// Throws ArgumentError for n > N and OverflowError when n! or C leaves
/// the double range (unscaled mode, n > 170).
[[nodiscard]] Complex esp_proposed(const NodeSet& nodes, std::size_t n, ProposedOptions options = {});

/// e_0..e_N from the proposed recursion, one independent sweep per order.
[[nodiscard]] std::vector<Complex> esp_proposed_all(const NodeSet& nodes, ProposedOptions options = {});

[[nodiscard]] EspTable esp_traub_table(const NodeSet& nodes);
[[nodiscard]] EspTable esp_yang_table(const NodeSet& nodes);

/// e_0..e_{N-1} over the nodes with `drop_index` (0-based) removed, using the
/// first-node-removed recursion after swapping the dropped node into slot 0.
/// Throws EmptySetError for N = 1.
[[nodiscard]] std::vector<Complex> esp_mikkawy_dropped(const NodeSet& nodes, std::size_t drop_index);

/// Dropped-node ESPs e_0..e_{N-1} through any backend.
[[nodiscard]] std::vector<Complex> esp_dropped(const NodeSet& nodes, std::size_t drop_index,
                                               EspMethod method, ProposedOptions options = {});

/// Full-set ESPs e_0..e_N through any backend.
[[nodiscard]] std::vector<Complex> esp_all_orders(const NodeSet& nodes, EspMethod method,
                                                  ProposedOptions options = {});

/// Largest N the subset enumeration accepts.
inline constexpr std::size_t kOracleMaxNodes = 25;

/// Exact subset enumeration of e_n. Throws CombinatorialGuardError for N > 25.
[[nodiscard]] Complex esp_bruteforce_oracle(const NodeSet& nodes, std::size_t n);

/// Coefficients a_0..a_N (ascending powers) of prod_k (x - v_k); a_N = 1.
[[nodiscard]] std::vector<Complex> monic_coefficients(const NodeSet& nodes,
                                                      EspMethod method = EspMethod::traub);

}  // namespace vandinv
