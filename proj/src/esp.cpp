#include "vandinv/esp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "vandinv/error.hpp"

namespace vandinv {

namespace {

bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Neumaier summation, applied to real and imaginary parts independently.
class CompensatedSum {
public:
    void add(const Complex& x) {
        add_part(sum_re_, comp_re_, x.real());
        add_part(sum_im_, comp_im_, x.imag());
    }
    [[nodiscard]] Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

Complex accumulate(std::span<const Complex> values, bool compensated) {
    if (compensated) {
        CompensatedSum acc;
        for (const auto& x : values) acc.add(x);
        return acc.value();
    }
    Complex acc{0.0, 0.0};
    for (const auto& x : values) acc += x;
    return acc;
}

// e_0..e_m of `kept` through the first-node-removed recursion, using the
// shifted indexing tau_{n,j} = e_{j-1}(w_2..w_n), tau_{1,1} = 1 and tau_{n,1} = 1.
std::vector<Complex> mikkawy_recursion(std::span<const Complex> kept) {
    const std::size_t m = kept.size();
    // tau[j] holds tau_{n,j} for the current n; index 0 unused.
    std::vector<Complex> tau(m + 2, Complex{0.0, 0.0});
    tau[1] = 1.0;
    for (std::size_t n = 2; n <= m + 1; ++n) {
        const Complex w = kept[n - 2];
        tau[n] = tau[n - 1] * w;
        for (std::size_t j = n - 1; j >= 2; --j) tau[j] = tau[j - 1] * w + tau[j];
    }
    return {tau.begin() + 1, tau.begin() + static_cast<std::ptrdiff_t>(m) + 2};
}

}  // namespace

std::string_view to_string(EspMethod method) noexcept {
    switch (method) {
        case EspMethod::proposed: return "proposed";
        case EspMethod::traub: return "traub";
        case EspMethod::yang: return "yang";
        case EspMethod::mikkawy: return "mikkawy";
    }
    return "unknown";
}

EspMethod parse_esp_method(std::string_view name) {
    for (auto m : kAllEspMethods) {
        if (to_string(m) == name) return m;
    }
    throw ArgumentError("unknown ESP backend '" + std::string(name) +
                        "' (expected proposed, traub, yang or mikkawy)");
}

EspTable::EspTable(std::size_t order)
    : order_(order), entries_(offset(order + 1), Complex{0.0, 0.0}) {
    for (std::size_t n = 0; n <= order_; ++n) entries_[offset(n)] = 1.0;
}

Complex EspTable::at(std::size_t n, std::size_t j) const {
    if (n > order_) throw ArgumentError("ESP table row out of range");
    if (j > n) return {0.0, 0.0};
    return entries_[offset(n) + j];
}

Complex& EspTable::ref(std::size_t n, std::size_t j) {
    if (n > order_ || j > n) throw ArgumentError("ESP table entry out of range");
    return entries_[offset(n) + j];
}

std::span<const Complex> EspTable::row(std::size_t n) const {
    if (n > order_) throw ArgumentError("ESP table row out of range");
    return std::span<const Complex>(entries_).subspan(offset(n), n + 1);
}

Complex esp_proposed(const NodeSet& nodes, std::size_t n, ProposedOptions options) {
    const std::size_t count = nodes.size();
    if (n > count)
        throw ArgumentError("ESP order " + std::to_string(n) + " exceeds node count " +
                            std::to_string(count));
    if (n == 0) return {1.0, 0.0};
    if (!options.scaled && n > kMaxUnscaledOrder)
        throw OverflowError("order " + std::to_string(n) +
                            " overflows n! in double precision; enable scaled mode");

    std::vector<Complex> f(nodes.begin(), nodes.end());
    Complex c = accumulate(f, options.compensated);
    for (std::size_t i = 1; i < n; ++i) {
        const double weight = static_cast<double>(n - i);
        if (options.scaled) {
            const double step = static_cast<double>(i + 1);
            for (std::size_t d = 0; d < count; ++d) f[d] = nodes[d] * (c - weight * f[d]) / step;
        } else {
            for (std::size_t d = 0; d < count; ++d) f[d] = nodes[d] * (c - weight * f[d]);
        }
        c = accumulate(f, options.compensated);
    }

    Complex result = c;
    if (!options.scaled) {
        double factorial = 1.0;
        for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
        result = c / factorial;
    }
    if (!is_finite(result))
        throw OverflowError("proposed ESP recursion left the double range at order " +
                            std::to_string(n));
    return result;
}

std::vector<Complex> esp_proposed_all(const NodeSet& nodes, ProposedOptions options) {
    std::vector<Complex> out(nodes.size() + 1);
    for (std::size_t n = 0; n <= nodes.size(); ++n) out[n] = esp_proposed(nodes, n, options);
    return out;
}

EspTable esp_traub_table(const NodeSet& nodes) {
    const std::size_t count = nodes.size();
    EspTable table(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const Complex v = nodes[n - 1];
        for (std::size_t j = 1; j <= n; ++j) table.ref(n, j) = table.at(n - 1, j) + v * table.at(n - 1, j - 1);
    }
    return table;
}

EspTable esp_yang_table(const NodeSet& nodes) {
    const std::size_t count = nodes.size();
    EspTable table(count);
    // sigma_{n,j} = sum_k (v_n v_{n-1} ... v_{n-k+1}) sigma_{n-k-1, j-k}; when the
    // run covers every node (k = n) the remainder is the empty set, sigma = 1.
    for (std::size_t n = 1; n <= count; ++n) {
        for (std::size_t j = 1; j <= n; ++j) {
            Complex sum{0.0, 0.0};
            Complex run{1.0, 0.0};
            for (std::size_t k = 0; k <= j; ++k) {
                if (k > 0) run *= nodes[n - k];
                if (k < n)
                    sum += run * table.at(n - k - 1, j - k);
                else if (j == n)
                    sum += run;
            }
            table.ref(n, j) = sum;
        }
    }
    return table;
}

std::vector<Complex> esp_mikkawy_dropped(const NodeSet& nodes, std::size_t drop_index) {
    if (nodes.size() < 2) throw EmptySetError("cannot drop the only node");
    if (drop_index >= nodes.size()) throw ArgumentError("drop index out of range");
    std::vector<Complex> w(nodes.begin(), nodes.end());
    std::swap(w[0], w[drop_index]);
    return mikkawy_recursion(std::span<const Complex>(w).subspan(1));
}

std::vector<Complex> esp_dropped(const NodeSet& nodes, std::size_t drop_index, EspMethod method,
                                 ProposedOptions options) {
    if (method == EspMethod::mikkawy) return esp_mikkawy_dropped(nodes, drop_index);
    const NodeSet reduced = nodes.without(drop_index);
    return esp_all_orders(reduced, method, options);
}

std::vector<Complex> esp_all_orders(const NodeSet& nodes, EspMethod method, ProposedOptions options) {
    switch (method) {
        case EspMethod::proposed: return esp_proposed_all(nodes, options);
        case EspMethod::traub: {
            const auto row = esp_traub_table(nodes).row(nodes.size());
            return {row.begin(), row.end()};
        }
        case EspMethod::yang: {
            const auto row = esp_yang_table(nodes).row(nodes.size());
            return {row.begin(), row.end()};
        }
        case EspMethod::mikkawy: return mikkawy_recursion(nodes.values());
    }
    throw ArgumentError("unknown ESP backend");
}

namespace {

void enumerate_subsets(std::span<const Complex> v, std::size_t start, std::size_t remaining,
                       Complex product, Complex& total) {
    if (remaining == 0) {
        total += product;
        return;
    }
    for (std::size_t k = start; k + remaining <= v.size(); ++k)
        enumerate_subsets(v, k + 1, remaining - 1, product * v[k], total);
}

}  // namespace

Complex esp_bruteforce_oracle(const NodeSet& nodes, std::size_t n) {
    if (nodes.size() > kOracleMaxNodes)
        throw CombinatorialGuardError("brute-force ESP oracle is limited to " +
                                      std::to_string(kOracleMaxNodes) + " nodes");
    if (n > nodes.size()) throw ArgumentError("ESP order exceeds node count");
    Complex total{0.0, 0.0};
    enumerate_subsets(nodes.values(), 0, n, Complex{1.0, 0.0}, total);
    return total;
}

std::vector<Complex> monic_coefficients(const NodeSet& nodes, EspMethod method) {
    const std::size_t count = nodes.size();
    const auto e = esp_all_orders(nodes, method);
    std::vector<Complex> a(count + 1);
    for (std::size_t j = 0; j <= count; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        a[count - j] = sign * e[j];
    }
    return a;
}

}  // namespace vandinv
