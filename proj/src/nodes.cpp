#include "vandinv/nodes.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vandinv/error.hpp"

namespace vandinv {

std::string_view to_string(NodeFamily family) noexcept {
    switch (family) {
        case NodeFamily::equidistant: return "equidistant";
        case NodeFamily::chebyshev: return "chebyshev";
        case NodeFamily::extended_chebyshev: return "extended-chebyshev";
        case NodeFamily::gauss_lobatto: return "gauss-lobatto";
        case NodeFamily::roots_of_unity: return "roots-of-unity";
    }
    return "unknown";
}

NodeFamily parse_node_family(std::string_view name) {
    for (auto f : kAllNodeFamilies) {
        if (to_string(f) == name) return f;
    }
    throw ArgumentError("unknown node family '" + std::string(name) + "'");
}

NodeSet generate_nodes(const NodeSpec& spec) {
    const std::size_t n = spec.count;
    const double nd = static_cast<double>(n);
    constexpr double pi = std::numbers::pi;

    if (spec.kind == NodeFamily::roots_of_unity) {
        if (n < 1) throw ArgumentError("roots of unity need N >= 1");
        std::vector<Complex> v(n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double angle = 2.0 * pi * static_cast<double>(k) / nd;
            v[k - 1] = {std::cos(angle), std::sin(angle)};
        }
        return NodeSet(std::move(v));
    }

    if (n < 2)
        throw ArgumentError(std::string(to_string(spec.kind)) + " nodes need N >= 2");
    std::vector<double> x(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        switch (spec.kind) {
            case NodeFamily::equidistant: x[k - 1] = -1.0 + 2.0 * (kd - 1.0) / (nd - 1.0); break;
            case NodeFamily::chebyshev: x[k - 1] = std::cos((2.0 * kd - 1.0) * pi / (2.0 * nd)); break;
            case NodeFamily::extended_chebyshev:
                x[k - 1] = std::cos((2.0 * kd - 1.0) * pi / (2.0 * nd)) / std::cos(pi / (2.0 * nd));
                break;
            case NodeFamily::gauss_lobatto: x[k - 1] = std::cos((kd - 1.0) * pi / (nd - 1.0)); break;
            case NodeFamily::roots_of_unity: break;
        }
    }
    return NodeSet::from_real(x);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) noexcept {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(master) ^ a) ^ b);
}

namespace {

std::vector<Complex> draw_perturbed(std::size_t count, const PerturbationSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    const double mag_part = spec.sigma_mag / std::numbers::sqrt2;
    const double nd = static_cast<double>(count);

    std::vector<Complex> v(count);
    for (std::size_t k = 1; k <= count; ++k) {
        const double base = 2.0 * std::numbers::pi * static_cast<double>(k) / nd;
        const double shift = spec.sigma_shift * unit(rng);
        const double re_noise = mag_part * unit(rng);
        const double im_noise = mag_part * unit(rng);
        Complex node;
        if (spec.model == ShiftModel::phase)
            node = std::polar(1.0, base + shift);
        else
            node = std::polar(std::exp(shift), base);
        v[k - 1] = node + Complex{re_noise, im_noise};
    }
    return v;
}

}  // namespace

NodeSet perturb_roots_of_unity(std::size_t count, const PerturbationSpec& spec) {
    if (count < 2) throw ArgumentError("perturbed roots of unity need N >= 2");
    if (!(std::isfinite(spec.sigma_shift) && spec.sigma_shift >= 0.0 &&
          std::isfinite(spec.sigma_mag) && spec.sigma_mag >= 0.0))
        throw ArgumentError("perturbation standard deviations must be finite and non-negative");

    for (int attempt = 0; attempt <= kPerturbationRetries; ++attempt) {
        const std::uint64_t seed =
            attempt == 0 ? spec.seed : derive_seed(spec.seed, 0x7e7241ULL, static_cast<std::uint64_t>(attempt));
        auto v = draw_perturbed(count, spec, seed);
        if (validate_pairwise_distinct(v).distinct) return NodeSet(std::move(v));
    }
    throw ArgumentError("perturbation collapsed nodes on every retry");
}

}  // namespace vandinv
