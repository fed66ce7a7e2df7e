#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "vandinv/error.hpp"
#include "vandinv/nodes.hpp"
#include "vandinv/vandermonde.hpp"

using namespace vandinv;
using vandinv::testing::random_nodes;
using vandinv::testing::random_size;

namespace {

const Complex I{0.0, 1.0};

void check_matrix(const Matrix& m, std::initializer_list<std::initializer_list<Complex>> expected,
                  double tol = 1e-14) {
    REQUIRE(m.rows() == static_cast<Eigen::Index>(expected.size()));
    Eigen::Index r = 0;
    for (const auto& row : expected) {
        REQUIRE(m.cols() == static_cast<Eigen::Index>(row.size()));
        Eigen::Index c = 0;
        for (const auto& e : row) {
            CHECK(std::abs(m(r, c) - e) <= tol);
            ++c;
        }
        ++r;
    }
}

double identity_residual(const Matrix& inv, const NodeSet& nodes) {
    const Matrix v = build_vandermonde(nodes);
    const auto n = v.rows();
    return (inv * v - Matrix::Identity(n, n)).norm() / std::sqrt(static_cast<double>(n));
}

}  // namespace

TEST_CASE("build_vandermonde") {
    const NodeSet n12{1.0, 2.0};
    check_matrix(build_vandermonde(n12), {{1.0, 1.0}, {1.0, 2.0}});
    check_matrix(build_vandermonde(NodeSet{2.0}, 3), {{1.0}, {2.0}, {4.0}});

    const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, 4});
    const Matrix v = build_vandermonde(roots);
    CHECK((v * v.adjoint() - 4.0 * Matrix::Identity(4, 4)).norm() < 1e-14);

    std::mt19937_64 rng(1);
    const NodeSet nodes = random_nodes(rng, 7);
    const Matrix w = build_vandermonde(nodes);
    for (Eigen::Index c = 0; c < 7; ++c) {
        CHECK(w(0, c) == Complex{1.0});
        for (Eigen::Index r = 1; r < 7; ++r) CHECK(w(r, c) == w(r - 1, c) * nodes[static_cast<std::size_t>(c)]);
    }
}

TEST_CASE("barycentric weights") {
    const auto w12 = barycentric_weights(NodeSet{1.0, 2.0}).lambdas;
    CHECK(w12[0] == Complex{-1.0});
    CHECK(w12[1] == Complex{1.0});

    const auto w012 = barycentric_weights(NodeSet{0.0, 1.0, 2.0}).lambdas;
    CHECK(w012[0] == Complex{2.0});
    CHECK(w012[1] == Complex{-1.0});
    CHECK(w012[2] == Complex{2.0});

    const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, 4});
    const auto wr = barycentric_weights(roots).lambdas;
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(wr[k] - 4.0 * std::pow(roots[k], 3)) < 1e-14);
        CHECK(std::abs(std::abs(wr[k]) - 4.0) < 1e-14);
    }

    // Tiny but distinct nodes push the product below the singularity threshold.
    std::vector<Complex> tiny(40);
    for (std::size_t k = 0; k < tiny.size(); ++k) tiny[k] = 1e-9 * static_cast<double>(k + 1);
    CHECK_THROWS_AS((void)barycentric_weights(NodeSet(tiny)), SingularityError);
}

TEST_CASE("Stanley matrix") {
    const auto s12 = stanley_matrix(NodeSet{1.0, 2.0}, EspMethod::traub);
    check_matrix(s12.to_matrix(), {{1.0, 0.0}, {-3.0, 1.0}});

    const auto s123 = stanley_matrix(NodeSet{1.0, 2.0, 3.0}, EspMethod::proposed);
    CHECK(std::abs(s123.coefficient(1) + 6.0) < 1e-14);
    CHECK(std::abs(s123.coefficient(2) - 11.0) < 1e-14);

    const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, 9});
    for (auto m : kAllEspMethods) {
        const auto s = stanley_matrix(roots, m);
        const Matrix a = s.to_matrix();
        for (std::size_t j = 1; j < 9; ++j) CHECK(std::abs(s.coefficient(j)) < 1e-13);
        for (Eigen::Index r = 0; r < 9; ++r) {
            CHECK(a(r, r) == Complex{1.0});
            for (Eigen::Index c = r + 1; c < 9; ++c) CHECK(a(r, c) == Complex{0.0});
        }
    }
}

TEST_CASE("inverses of small matrices") {
    const NodeSet n12{1.0, 2.0};
    for (auto b : kAllInverseBackends) {
        for (auto m : kAllEspMethods) {
            const auto inv = invert(n12, b, m);
            check_matrix(inv.matrix, {{2.0, -1.0}, {-1.0, 1.0}});
            CHECK(inv.inverse_backend == b);
        }
    }
    CHECK(inverse_closed_form(n12, EspMethod::proposed).matrix(0, 1) == Complex{-1.0});

    const auto wa = inverse_wa_product(NodeSet{1.0, 2.0, 3.0}, EspMethod::traub).matrix;
    CHECK(std::abs(wa(0, 0) - 3.0) < 1e-14);
    CHECK(std::abs(wa(0, 1) + 2.5) < 1e-14);
    CHECK(std::abs(wa(0, 2) - 0.5) < 1e-14);

    const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, 4});
    const Matrix expected = build_vandermonde(roots).adjoint() / 4.0;
    CHECK((inverse_elimination_baseline(roots).matrix - expected).norm() < 1e-15);
    CHECK_FALSE(inverse_elimination_baseline(roots).esp_backend.has_value());

    check_matrix(inverse_closed_form(NodeSet{3.0}, EspMethod::proposed).matrix, {{1.0}});
}

TEST_CASE("serial and parallel closed-form kernels agree bit for bit") {
    std::mt19937_64 rng(8);
    for (auto m : kAllEspMethods) {
        const NodeSet nodes = random_nodes(rng, 23);
        const auto s = inverse_closed_form(nodes, m, Execution::serial).matrix;
        const auto p = inverse_closed_form(nodes, m, Execution::parallel).matrix;
        CHECK(s == p);
    }
}

TEST_CASE("factorization equivalence on unit-circle nodes") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = random_size(rng, 1, 15);
        std::vector<Complex> v;
        while (v.size() < n) {
            const Complex z = std::polar(1.0, phase(rng));
            if (std::all_of(v.begin(), v.end(), [&](Complex w) { return std::abs(w - z) > 1e-3; }))
                v.push_back(z);
        }
        const NodeSet nodes(v);
        const Matrix cf = inverse_closed_form(nodes, EspMethod::proposed).matrix;
        const Matrix wa = inverse_wa_product(nodes, EspMethod::proposed).matrix;
        CHECK(((cf - wa).cwiseAbs().array() <= 1e-12 * cf.cwiseAbs().array()).all());
    }
}

TEST_CASE("factorization equivalence row-wise on annulus nodes") {
    // Entries much smaller than their row are cancellation-limited in the W*A
    // route, so this check is normwise per row.
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 40; ++rep) {
        const NodeSet nodes = random_nodes(rng, random_size(rng, 1, 15));
        const Matrix cf = inverse_closed_form(nodes, EspMethod::proposed).matrix;
        const Matrix wa = inverse_wa_product(nodes, EspMethod::proposed).matrix;
        for (Eigen::Index i = 0; i < cf.rows(); ++i)
            CHECK((cf.row(i) - wa.row(i)).norm() <= 1e-12 * cf.row(i).norm());
    }
}

TEST_CASE("identity residual on every node family") {
    for (std::size_t n = 2; n <= 20; ++n) {
        for (auto f : kAllNodeFamilies) {
            const NodeSet nodes = generate_nodes({f, n});
            const auto inv = inverse_closed_form(nodes, EspMethod::proposed);
            const double res = identity_residual(inv.matrix, nodes);
            CAPTURE(n);
            CAPTURE(to_string(f));
            CHECK(res < (f == NodeFamily::roots_of_unity ? 1e-12 : 1e-8));
        }
    }
}

TEST_CASE("baseline agreement on roots of unity") {
    for (std::size_t n = 1; n <= 30; ++n) {
        const NodeSet roots = generate_nodes({NodeFamily::roots_of_unity, n});
        const Matrix cf = inverse_closed_form(roots, EspMethod::proposed).matrix;
        const Matrix wa = inverse_wa_product(roots, EspMethod::proposed).matrix;
        const Matrix el = inverse_elimination_baseline(roots).matrix;
        CHECK((cf - el).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((wa - el).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("scaling covariance") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> alpha_dist(0.5, 2.0);
    for (int rep = 0; rep < 20; ++rep) {
        const NodeSet nodes = random_nodes(rng, random_size(rng, 1, 10));
        const double alpha = alpha_dist(rng);
        const Matrix base = inverse_closed_form(nodes, EspMethod::proposed).matrix;
        const Matrix scaled = inverse_closed_form(nodes.scaled(alpha), EspMethod::proposed).matrix;
        for (Eigen::Index i = 0; i < base.rows(); ++i) {
            for (Eigen::Index j = 0; j < base.cols(); ++j) {
                const Complex expected = base(i, j) * std::pow(alpha, -static_cast<double>(j));
                CHECK(std::abs(scaled(i, j) - expected) <= 1e-9 * std::abs(expected));
            }
        }
    }
}

TEST_CASE("first column of V^-1 V") {
    std::mt19937_64 rng(6);
    const NodeSet nodes = random_nodes(rng, 9);
    const Matrix inv = inverse_closed_form(nodes, EspMethod::proposed).matrix;
    const Matrix v = build_vandermonde(nodes);
    // Column c of V^-1 V collects the cardinal functions at v_c.
    const Vector col = inv * v.col(0);
    CHECK(std::abs(col(0) - 1.0) < 1e-12);
    CHECK(col.tail(8).norm() < 1e-12);
}

TEST_CASE("elimination baseline singularity") {
    // Distinct at the node-set tolerance but far too close for the pivot test.
    const NodeSet nodes{1.0, 1.0 + 1e-9, 1.0 + 2e-9};
    CHECK_THROWS_AS((void)inverse_elimination_baseline(nodes), SingularityError);
}

TEST_CASE("solve_dual") {
    const NodeSet n12{1.0, 2.0};
    for (auto b : kAllInverseBackends) {
        const std::vector<Complex> x{1.0, 2.0};
        const Vector c = solve_dual(n12, x, b, EspMethod::proposed);
        CHECK(std::abs(c(0)) < 1e-14);
        CHECK(std::abs(c(1) - 1.0) < 1e-14);

        const std::vector<Complex> ones{1.0, 1.0};
        const Vector d = solve_dual(n12, ones, b, EspMethod::traub);
        CHECK(std::abs(d(0) - 1.0) < 1e-14);
        CHECK(std::abs(d(1)) < 1e-14);

        const std::vector<Complex> quad{1.0, 2.0, 5.0};
        const Vector q = solve_dual(NodeSet{0.0, 1.0, 2.0}, quad, b, EspMethod::yang);
        CHECK(std::abs(q(0) - 1.0) < 1e-14);
        CHECK(std::abs(q(1)) < 1e-14);
        CHECK(std::abs(q(2) - 1.0) < 1e-14);
    }
    const std::vector<Complex> wrong{1.0};
    CHECK_THROWS_AS((void)solve_dual(n12, wrong, InverseBackend::closed_form, EspMethod::proposed), ArgumentError);
}

TEST_CASE("real part of a real-node inverse") {
    const NodeSet nodes = generate_nodes({NodeFamily::chebyshev, 8});
    const auto inv = inverse_closed_form(nodes, EspMethod::traub);
    const Eigen::MatrixXd re = real_part_checked(inv);
    CHECK((re - inv.matrix.real()).norm() == 0.0);
    CHECK_THROWS_AS((void)real_part_checked(inverse_closed_form(generate_nodes({NodeFamily::roots_of_unity, 8}),
                                                                EspMethod::traub)),
                    ArgumentError);
}

TEST_CASE("inverse backend names round-trip") {
    for (auto b : kAllInverseBackends) CHECK(parse_inverse_backend(to_string(b)) == b);
    CHECK_THROWS_AS((void)parse_inverse_backend("eisinberg"), ArgumentError);
}
