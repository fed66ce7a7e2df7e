#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace vandinv {

using Complex = std::complex<double>;

/// Relative pairwise-distinctness tolerance: two nodes collide when
/// |v_k - v_j| <= kDistinctTolerance * max|v|.
inline constexpr double kDistinctTolerance = 1e-12;

/// Closest pair found by validate_pairwise_distinct (0-based indices).
struct DistinctnessReport {
    bool distinct = true;
    std::size_t first = 0;
    std::size_t second = 0;
    double distance = 0.0;
};

/// O(N^2) scan for the closest pair. Sets with fewer than two nodes are distinct.
[[nodiscard]] DistinctnessReport validate_pairwise_distinct(std::span<const Complex> values);

/// Ordered, immutable list of pairwise-distinct complex sample nodes.
class NodeSet {
public:
    /// Throws ArgumentError when empty or when two nodes collide.
    explicit NodeSet(std::vector<Complex> values);
    NodeSet(std::initializer_list<Complex> values);

    /// Real nodes are stored with zero imaginary part.
    [[nodiscard]] static NodeSet from_real(std::span<const double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Complex& operator[](std::size_t k) const noexcept { return values_[k]; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    [[nodiscard]] double max_abs() const noexcept;

    /// Copy with the node at `index` (0-based) removed. Throws EmptySetError for N = 1.
    [[nodiscard]] NodeSet without(std::size_t index) const;

    /// Copy with every node multiplied by `factor`.
    [[nodiscard]] NodeSet scaled(Complex factor) const;

private:
    struct Unchecked {};
    NodeSet(std::vector<Complex> values, Unchecked) : values_(std::move(values)) {}

    std::vector<Complex> values_;
};

[[nodiscard]] DistinctnessReport validate_pairwise_distinct(const NodeSet& nodes);

}  // namespace vandinv
