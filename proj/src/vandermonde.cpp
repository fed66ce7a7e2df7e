#include "vandinv/vandermonde.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "vandinv/error.hpp"

namespace vandinv {

std::string_view to_string(InverseBackend backend) noexcept {
    switch (backend) {
        case InverseBackend::closed_form: return "closed-form";
        case InverseBackend::wa_product: return "wa-product";
        case InverseBackend::elimination_baseline: return "baseline";
    }
    return "unknown";
}

InverseBackend parse_inverse_backend(std::string_view name) {
    for (auto b : kAllInverseBackends) {
        if (to_string(b) == name) return b;
    }
    throw ArgumentError("unknown inverse backend '" + std::string(name) +
                        "' (expected closed-form, wa-product or baseline)");
}

Matrix build_vandermonde(const NodeSet& nodes, std::optional<std::size_t> rows) {
    const auto cols = static_cast<Eigen::Index>(nodes.size());
    const auto r = static_cast<Eigen::Index>(rows.value_or(nodes.size()));
    if (r < 1) throw ArgumentError("Vandermonde matrix needs at least one row");
    Matrix v(r, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        v(0, c) = 1.0;
        for (Eigen::Index k = 1; k < r; ++k) v(k, c) = v(k - 1, c) * nodes[static_cast<std::size_t>(c)];
    }
    return v;
}

BarycentricWeights barycentric_weights(const NodeSet& nodes) {
    const std::size_t count = nodes.size();
    BarycentricWeights w{std::vector<Complex>(count, Complex{1.0, 0.0})};
    for (std::size_t k = 0; k < count; ++k) {
        Complex p{1.0, 0.0};
        for (std::size_t j = 0; j < count; ++j) {
            if (j != k) p *= nodes[k] - nodes[j];
        }
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
            throw OverflowError("barycentric weight " + std::to_string(k + 1) + " overflowed");
        if (std::abs(p) < kSingularWeight)
            throw SingularityError("barycentric weight " + std::to_string(k + 1) +
                                   " vanished; nodes are numerically coincident");
        w.lambdas[k] = p;
    }
    return w;
}

Matrix StanleyMatrix::to_matrix() const {
    const auto n = static_cast<Eigen::Index>(coeffs_.size());
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c <= r; ++c) a(r, c) = coeffs_[static_cast<std::size_t>(r - c)];
    }
    return a;
}

StanleyMatrix stanley_matrix(const NodeSet& nodes, EspMethod esp, ProposedOptions options) {
    const auto e = esp_all_orders(nodes, esp, options);
    std::vector<Complex> a(nodes.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = (j % 2 == 0 ? 1.0 : -1.0) * e[j];
    return StanleyMatrix(std::move(a));
}

namespace {

void closed_form_row(const NodeSet& nodes, std::size_t i, const Complex& lambda, EspMethod esp,
                     ProposedOptions options, Matrix& out) {
    const std::size_t count = nodes.size();
    const auto row = static_cast<Eigen::Index>(i);
    if (count == 1) {
        out(row, 0) = 1.0 / lambda;
        return;
    }
    const auto dropped = esp_dropped(nodes, i, esp, options);
    // Columns are 1-based j in the formula; e_{N-j} sits at dropped[N - j].
    for (std::size_t j = 1; j < count; ++j) {
        const double sign = ((count - j) % 2 == 0) ? 1.0 : -1.0;
        out(row, static_cast<Eigen::Index>(j - 1)) = sign * dropped[count - j] / lambda;
    }
    out(row, static_cast<Eigen::Index>(count - 1)) = 1.0 / lambda;
}

}  // namespace

InverseResult inverse_closed_form(const NodeSet& nodes, EspMethod esp, Execution exec,
                                  ProposedOptions options) {
    const std::size_t count = nodes.size();
    const auto weights = barycentric_weights(nodes);
    Matrix inv(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));

    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i)
            closed_form_row(nodes, i, weights.lambdas[i], esp, options, inv);
    } else {
        std::vector<std::exception_ptr> errors(count);
        const auto rows = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            const auto row = static_cast<std::size_t>(i);
            try {
                closed_form_row(nodes, row, weights.lambdas[row], esp, options, inv);
            } catch (...) {
                errors[row] = std::current_exception();
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    return {std::move(inv), esp, InverseBackend::closed_form};
}

InverseResult inverse_wa_product(const NodeSet& nodes, EspMethod esp, ProposedOptions options) {
    const std::size_t count = nodes.size();
    const auto n = static_cast<Eigen::Index>(count);
    const auto weights = barycentric_weights(nodes);

    // W row i: v_i^{N-1}, v_i^{N-2}, ..., 1, divided by lambda_i.
    Matrix w(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex v = nodes[static_cast<std::size_t>(i)];
        Complex power{1.0, 0.0};
        for (Eigen::Index c = n - 1; c >= 0; --c) {
            w(i, c) = power;
            power *= v;
        }
        w.row(i) /= weights.lambdas[static_cast<std::size_t>(i)];
    }
    const Matrix a = stanley_matrix(nodes, esp, options).to_matrix();
    return {w * a, esp, InverseBackend::wa_product};
}

InverseResult inverse_elimination_baseline(const NodeSet& nodes) {
    const Matrix v = build_vandermonde(nodes);
    const Eigen::PartialPivLU<Matrix> lu(v);
    const double scale = v.cwiseAbs().maxCoeff();
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index k = 0; k < diag.size(); ++k) {
        if (!(std::abs(diag(k)) >= kPivotTolerance * scale))
            throw SingularityError("elimination pivot " + std::to_string(k + 1) +
                                   " is numerically zero");
    }
    return {lu.inverse(), std::nullopt, InverseBackend::elimination_baseline};
}

InverseResult invert(const NodeSet& nodes, InverseBackend backend, EspMethod esp, Execution exec) {
    switch (backend) {
        case InverseBackend::closed_form: return inverse_closed_form(nodes, esp, exec);
        case InverseBackend::wa_product: return inverse_wa_product(nodes, esp);
        case InverseBackend::elimination_baseline: return inverse_elimination_baseline(nodes);
    }
    throw ArgumentError("unknown inverse backend");
}

Vector solve_dual(const InverseResult& inverse, std::span<const Complex> rhs) {
    if (static_cast<Eigen::Index>(rhs.size()) != inverse.matrix.rows())
        throw ArgumentError("right-hand side length " + std::to_string(rhs.size()) +
                            " does not match matrix order " + std::to_string(inverse.matrix.rows()));
    const Eigen::Map<const Vector> f(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
    return inverse.matrix.transpose() * f;
}

Vector solve_dual(const NodeSet& nodes, std::span<const Complex> rhs, InverseBackend backend,
                  EspMethod esp) {
    if (rhs.size() != nodes.size())
        throw ArgumentError("right-hand side length must equal the node count");
    return solve_dual(invert(nodes, backend, esp), rhs);
}

Eigen::MatrixXd real_part_checked(const InverseResult& inverse) {
    const double bound = 1e-12 * inverse.matrix.norm();
    const double worst = inverse.matrix.imag().cwiseAbs().maxCoeff();
    if (worst > bound)
        throw ArgumentError("inverse has imaginary parts up to " + std::to_string(worst) +
                            ", above the real-input bound");
    return inverse.matrix.real();
}

}  // namespace vandinv
