#include <doctest.h>

#include <cmath>
#include <limits>

#include "vandinv/error.hpp"
#include "vandinv/nodes.hpp"

using namespace vandinv;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_nodes(const NodeSet& nodes, std::initializer_list<Complex> expected) {
    REQUIRE(nodes.size() == expected.size());
    std::size_t k = 0;
    for (const auto& e : expected) {
        CHECK(std::abs(nodes[k] - e) < 1e-15);
        ++k;
    }
}
}  // namespace

TEST_CASE("NodeSet invariants") {
    CHECK_THROWS_AS(NodeSet(std::vector<Complex>{}), ArgumentError);
    CHECK_THROWS_AS((NodeSet{1.0, 1.0}), ArgumentError);
    CHECK_NOTHROW((NodeSet{0.0}));

    const NodeSet n{1.0, 2.0, 3.0};
    check_nodes(n.without(1), {1.0, 3.0});
    CHECK_THROWS_AS((void)NodeSet{4.0}.without(0), EmptySetError);
    CHECK_THROWS_AS((void)n.without(3), ArgumentError);
}

TEST_CASE("validate_pairwise_distinct") {
    const std::vector<Complex> ok{1.0, 2.0, 3.0};
    CHECK(validate_pairwise_distinct(ok).distinct);

    const std::vector<Complex> close{1.0, 1.0 + 1e-15};
    const auto report = validate_pairwise_distinct(close);
    CHECK_FALSE(report.distinct);
    CHECK(report.first == 0);
    CHECK(report.second == 1);

    CHECK(validate_pairwise_distinct(generate_nodes({NodeFamily::roots_of_unity, 70})).distinct);
}

TEST_CASE("generate_nodes formulas") {
    check_nodes(generate_nodes({NodeFamily::equidistant, 3}), {-1.0, 0.0, 1.0});
    check_nodes(generate_nodes({NodeFamily::roots_of_unity, 4}), {Complex{0, 1}, -1.0, Complex{0, -1}, 1.0});
    check_nodes(generate_nodes({NodeFamily::gauss_lobatto, 3}), {1.0, 0.0, -1.0});

    const auto cheb = generate_nodes({NodeFamily::chebyshev, 2});
    check_nodes(cheb, {std::sqrt(0.5), -std::sqrt(0.5)});
    const auto ext = generate_nodes({NodeFamily::extended_chebyshev, 5});
    CHECK(std::abs(ext[0] - 1.0) < 1e-15);
    CHECK(std::abs(ext[4] + 1.0) < 1e-15);

    for (auto f : {NodeFamily::equidistant, NodeFamily::chebyshev, NodeFamily::extended_chebyshev,
                   NodeFamily::gauss_lobatto}) {
        CHECK_THROWS_AS((void)generate_nodes({f, 1}), ArgumentError);
    }
    CHECK_NOTHROW((void)generate_nodes({NodeFamily::roots_of_unity, 1}));
    CHECK_THROWS_AS((void)generate_nodes({NodeFamily::roots_of_unity, 0}), ArgumentError);
}

TEST_CASE("family ranges and endpoints") {
    for (std::size_t n : {2u, 3u, 10u, 37u, 74u, 200u}) {
        for (auto f : {NodeFamily::equidistant, NodeFamily::chebyshev, NodeFamily::extended_chebyshev,
                       NodeFamily::gauss_lobatto}) {
            for (const auto& x : generate_nodes({f, n})) {
                CHECK(x.imag() == 0.0);
                CHECK(std::abs(x.real()) <= 1.0 + 2 * kEps);
            }
        }
        const auto gl = generate_nodes({NodeFamily::gauss_lobatto, n});
        CHECK(gl[0] == Complex{1.0});
        CHECK(gl[n - 1] == Complex{-1.0});
        for (const auto& x : generate_nodes({NodeFamily::chebyshev, n})) CHECK(std::abs(x.real()) < 1.0);
        for (const auto& v : generate_nodes({NodeFamily::roots_of_unity, n}))
            CHECK(std::abs(std::abs(v) - 1.0) <= 2 * kEps);
    }
}

TEST_CASE("family names round-trip") {
    for (auto f : kAllNodeFamilies) CHECK(parse_node_family(to_string(f)) == f);
    CHECK_THROWS_AS((void)parse_node_family("fekete"), ArgumentError);
}

TEST_CASE("perturbed roots of unity") {
    const auto exact = generate_nodes({NodeFamily::roots_of_unity, 16});
    const auto zero = perturb_roots_of_unity(16, {0.0, 0.0, 42});
    for (std::size_t k = 0; k < 16; ++k) CHECK(std::abs(zero[k] - exact[k]) < 1e-15);

    const PerturbationSpec spec{0.2, 0.1, 12345};
    const auto a = perturb_roots_of_unity(37, spec);
    const auto b = perturb_roots_of_unity(37, spec);
    for (std::size_t k = 0; k < 37; ++k) CHECK(a[k] == b[k]);

    const auto c = perturb_roots_of_unity(37, {0.2, 0.1, 12346});
    bool differs = false;
    for (std::size_t k = 0; k < 37; ++k) differs = differs || (a[k] != c[k]);
    CHECK(differs);

    CHECK_THROWS_AS((void)perturb_roots_of_unity(1, spec), ArgumentError);
    CHECK_THROWS_AS((void)perturb_roots_of_unity(8, {-0.1, 0.0, 1}), ArgumentError);
    CHECK_THROWS_AS((void)perturb_roots_of_unity(8, {0.0, std::nan(""), 1}), ArgumentError);
}

TEST_CASE("shift models") {
    // Phase noise alone keeps every node on the unit circle.
    for (const auto& v : perturb_roots_of_unity(37, {0.3, 0.0, 9, ShiftModel::phase}))
        CHECK(std::abs(std::abs(v) - 1.0) < 1e-14);
    // The literal reading keeps the angle and moves the radius.
    const auto exact = generate_nodes({NodeFamily::roots_of_unity, 37});
    const auto lit = perturb_roots_of_unity(37, {0.3, 0.0, 9, ShiftModel::literal});
    for (std::size_t k = 0; k < 37; ++k) {
        const Complex ratio = lit[k] / exact[k];
        CHECK(std::abs(ratio.imag()) < 1e-12);
        CHECK(ratio.real() > 0.0);
    }
}

TEST_CASE("perturbation sample statistics") {
    // Over many nodes the shift and offset stds match the spec.
    const std::size_t n = 4000;
    const auto shifted = perturb_roots_of_unity(n, {0.01, 0.0, 3});
    const auto exact = generate_nodes({NodeFamily::roots_of_unity, n});
    double s2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) s2 += std::pow(std::arg(shifted[k] / exact[k]), 2);
    CHECK(std::sqrt(s2 / n) == doctest::Approx(0.01).epsilon(0.05));

    const auto offset = perturb_roots_of_unity(n, {0.0, 0.02, 4});
    double m2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) m2 += std::norm(offset[k] - exact[k]);
    CHECK(std::sqrt(m2 / n) == doctest::Approx(0.02).epsilon(0.05));
}

TEST_CASE("derived seeds are distinct") {
    CHECK(derive_seed(1, 0, 0) != derive_seed(1, 0, 1));
    CHECK(derive_seed(1, 0, 1) != derive_seed(1, 1, 0));
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}
