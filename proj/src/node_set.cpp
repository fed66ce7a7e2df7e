#include "vandinv/node_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vandinv/error.hpp"

namespace vandinv {

DistinctnessReport validate_pairwise_distinct(std::span<const Complex> values) {
    DistinctnessReport report;
    if (values.size() < 2) return report;

    double scale = 0.0;
    for (const auto& v : values) scale = std::max(scale, std::abs(v));

    report.distance = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < values.size(); ++k) {
        for (std::size_t j = k + 1; j < values.size(); ++j) {
            const double d = std::abs(values[k] - values[j]);
            if (d < report.distance) {
                report.distance = d;
                report.first = k;
                report.second = j;
            }
        }
    }
    report.distinct = report.distance > kDistinctTolerance * scale;
    return report;
}

DistinctnessReport validate_pairwise_distinct(const NodeSet& nodes) {
    return validate_pairwise_distinct(nodes.values());
}

NodeSet::NodeSet(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw ArgumentError("NodeSet requires at least one node");
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ArgumentError("NodeSet nodes must be finite");
    }
    const auto report = validate_pairwise_distinct(values_);
    if (!report.distinct) {
        throw ArgumentError("nodes " + std::to_string(report.first + 1) + " and " +
                            std::to_string(report.second + 1) +
                            " are not pairwise distinct (distance " +
                            std::to_string(report.distance) + ")");
    }
}

NodeSet::NodeSet(std::initializer_list<Complex> values)
    : NodeSet(std::vector<Complex>(values)) {}

NodeSet NodeSet::from_real(std::span<const double> values) {
    std::vector<Complex> v(values.begin(), values.end());
    return NodeSet(std::move(v));
}

double NodeSet::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

NodeSet NodeSet::without(std::size_t index) const {
    if (values_.size() < 2) throw EmptySetError("cannot drop the only node of a NodeSet");
    if (index >= values_.size()) throw ArgumentError("drop index out of range");
    std::vector<Complex> reduced;
    reduced.reserve(values_.size() - 1);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k != index) reduced.push_back(values_[k]);
    }
    // A subset of a distinct set is distinct.
    return NodeSet(std::move(reduced), Unchecked{});
}

NodeSet NodeSet::scaled(Complex factor) const {
    std::vector<Complex> v(values_);
    for (auto& x : v) x *= factor;
    return NodeSet(std::move(v));
}

}  // namespace vandinv
