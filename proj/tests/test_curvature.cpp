#include <doctest.h>

#include "test_models.hpp"

using namespace acbm;
using namespace acbm::testing;

namespace {

Poly P(const AlgebraModel& m, const std::string& text) { return parse_poly(text, m.params()); }

}  // namespace

TEST_CASE("phiB curvature of the example vanishes") {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    const Connection np = phib_connection(m, lc);
    const CurvatureAnalysis analysis = phib_curvature(m, np);
    CHECK(analysis.r_prime.is_zero());
    CHECK(analysis.tau_prime.is_zero());
    CHECK(analysis.tau_prime_star.is_zero());
    CHECK(analysis.kaehler_flags.pair_antisymmetries);
    CHECK(analysis.kaehler_flags.cyclic_zero);
    CHECK(analysis.kaehler_flags.phi_anti_invariant);
}

TEST_CASE("F0 model: R' equals R (both zero for the abelian case)") {
    Brackets b(empty_param_set());
    const AlgebraModel m = standard_model(std::move(b.c));
    const Connection lc = levi_civita(m);
    const CurvatureAnalysis analysis = phib_curvature(m, phib_connection(m, lc));
    CHECK(analysis.r_prime == curvature_tensor(m, lc));
}

TEST_CASE("dual construction agreement on every tested model") {
    std::mt19937_64 rng(909);
    std::vector<AlgebraModel> models;
    models.push_back(heisenberg_model());
    models.push_back(u1_not_u3_model());
    for (int i = 0; i < 4; ++i) models.push_back(random_b_family_model(rng));
    for (int i = 0; i < 2; ++i) models.push_back(random_example_instance(rng));
    for (const auto& m : models) {
        const Connection lc = levi_civita(m);
        const Connection np = phib_connection(m, lc);
        CHECK(curvature_tensor(m, np) == phib_curvature_from_potential(m, lc, np));
    }
}

TEST_CASE("class-U curvature identities hold on the example") {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    const Tensor R = curvature_tensor(m, lc);
    const CurvatureAnalysis analysis = phib_curvature(m, phib_connection(m, lc));
    const Report report = curvature_u_identities(m, R, lc, analysis);
    CHECK(report.all_pass());
    SUBCASE("refused outside U") {
        const AlgebraModel h = heisenberg_model();
        const Connection hlc = levi_civita(h);
        const Tensor hR = curvature_tensor(h, hlc);
        const CurvatureAnalysis ha = phib_curvature(h, phib_connection(h, hlc));
        CHECK_THROWS_AS(curvature_u_identities(h, hR, hlc, ha), PreconditionError);
    }
}

TEST_CASE("scalar identity for the F0 model reduces to tau' = tau") {
    Brackets b(empty_param_set());
    const AlgebraModel m = standard_model(std::move(b.c));
    const Connection lc = levi_civita(m);
    const Tensor R = curvature_tensor(m, lc);
    const CurvatureAnalysis analysis = phib_curvature(m, phib_connection(m, lc));
    const ScalarCurvatures sc = scalar_curvatures(m, R, lc);
    CHECK(analysis.tau_prime == sc.tau);
    CHECK(curvature_u_identities(m, R, lc, analysis).all_pass());
}

TEST_CASE("the curvature-xi identity fails on the example with the frozen residual") {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    const Tensor R = curvature_tensor(m, lc);
    const auto check = curvature_xi_identity(m, R, nabla_xi(m, lc));
    CHECK_FALSE(check.pass);
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness == std::vector<int>{0, 4, 0});
    // Residual at (e1, xi, e1) is the negative of the (xi,e1,e1) value.
    CHECK(check.residual == P(m, "2*l1^2 + l2^2 + l2*m1 - 2*l3^2 - l4^2 - l4*m3").to_string());

    SUBCASE("it holds on the isotropic sublocus l1=l4=m3=1, rest 0") {
        ExampleParams p = ExampleParams::all(Rational(0));
        p.l1 = Rational(1);
        p.l4 = Rational(1);
        p.m3 = Rational(1);
        const AlgebraModel sub = build_example(p);
        const Connection slc = levi_civita(sub);
        CHECK(curvature_xi_identity(sub, curvature_tensor(sub, slc), nabla_xi(sub, slc)).pass);
    }
    SUBCASE("the closed form with the commutator correction holds symbolically") {
        // R(xi,y,z,xi) = -g(Sy,Sz) + g([S,A]y,z) with S = nabla xi and
        // A = nabla'_xi, checked for all y,z.
        const Connection np = phib_connection(m, lc);
        const Tensor nx = nabla_xi(m, lc);
        const Tensor r_xi = plug(plug(R, 3, m.xi()), 0, m.xi());  // R(xi,y,z,xi)
        const auto& g = m.metric();
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) {
                Poly rhs = Poly::zero(m.params());
                for (int a = 0; a < 5; ++a)
                    for (int b = 0; b < 5; ++b) {
                        const Rational gab = g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        if (gab == 0) continue;
                        rhs -= nx.at({a, y}) * nx.at({b, z}) * gab;
                    }
                for (int a = 0; a < 5; ++a) {
                    const Rational gaz = g[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)];
                    if (gaz == 0) continue;
                    Poly comm = Poly::zero(m.params());
                    for (int p = 0; p < 5; ++p) {
                        comm += nx.at({a, p}) * np.gamma.at({p, 4, y});
                        comm -= np.gamma.at({a, 4, p}) * nx.at({p, y});
                    }
                    rhs += comm * gaz;
                }
                CHECK(r_xi.at({y, z}) == rhs);
            }
    }
    SUBCASE("the full check reports the equivalence breakdown") {
        const Report report = xi_curvature_check(m, R, lc);
        const CheckEntry* eq = report.find("equivalence: xi-identity <-> U3");
        REQUIRE(eq != nullptr);
        CHECK_FALSE(eq->pass);
        const CheckEntry* flags = report.find("R' is phi-Kaehler-type");
        REQUIRE(flags != nullptr);
        CHECK(flags->pass);
    }
    SUBCASE("refused outside U1") {
        const AlgebraModel h = heisenberg_model();
        const Connection hlc = levi_civita(h);
        CHECK_THROWS_AS(xi_curvature_check(h, curvature_tensor(h, hlc), hlc), PreconditionError);
    }
}

TEST_CASE("kaehler-type flags") {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    SUBCASE("R of Levi-Civita: antisymmetries and first identity hold, phi-anti-invariance fails") {
        const Tensor R = curvature_tensor(m, lc);
        const KaehlerFlags flags = kaehler_type_flags(R, m);
        CHECK(flags.pair_antisymmetries);
        CHECK(flags.cyclic_zero);
        CHECK_FALSE(flags.phi_anti_invariant);
        const auto check = curvature_phi_anti_invariance(m, R);
        REQUIRE(check.witness.has_value());
        CHECK(*check.witness == std::vector<int>{0, 1, 0, 1});
        CHECK(check.residual ==
              P(m, "-l1^2 - 1/4*l2^2 - 1/2*l2*m1 - l3^2 - 1/4*l4^2 - 1/2*l4*m3 - 1/4*m1^2 - 1/4*m3^2")
                  .to_string());
    }
    SUBCASE("R of Levi-Civita on the heisenberg model also fails phi-anti-invariance") {
        const AlgebraModel h = heisenberg_model();
        const Tensor R = curvature_tensor(h, levi_civita(h));
        CHECK_FALSE(R.is_zero());
        const KaehlerFlags flags = kaehler_type_flags(R, h);
        CHECK(flags.pair_antisymmetries);
        CHECK(flags.cyclic_zero);
        CHECK_FALSE(flags.phi_anti_invariant);
        CHECK(R.at({0, 1, 0, 1}).constant_value() == Rational(3, 4));
    }
    SUBCASE("a metric-built curvature-like tensor satisfies the first two flags") {
        // L(x,y,z,w) = g(x,w)g(y,z) - g(x,z)g(y,w)
        Tensor L(5, {Slot::Covariant, Slot::Covariant, Slot::Covariant, Slot::Covariant},
                 m.params());
        const auto& g = m.metric();
        for_each_index(5, 4, [&](std::span<const int> idx) {
            const int x = idx[0], y = idx[1], z = idx[2], w = idx[3];
            const Rational value =
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(w)] * g[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)] -
                g[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] * g[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)];
            L.at(idx) = Poly::constant(m.params(), value);
        });
        const KaehlerFlags flags = kaehler_type_flags(L, m);
        CHECK(flags.pair_antisymmetries);
        CHECK(flags.cyclic_zero);
    }
}

TEST_CASE("heisenberg phiB curvature: antisymmetries and phi-anti-invariance without the cyclic identity") {
    const AlgebraModel h = heisenberg_model();
    const Connection lc = levi_civita(h);
    const CurvatureAnalysis analysis = phib_curvature(h, phib_connection(h, lc));
    CHECK_FALSE(analysis.r_prime.is_zero());
    CHECK(analysis.r_prime.at({0, 1, 0, 1}).constant_value() == Rational(1, 4));
    CHECK(analysis.kaehler_flags.pair_antisymmetries);
    CHECK_FALSE(analysis.kaehler_flags.cyclic_zero);
    CHECK(analysis.kaehler_flags.phi_anti_invariant);
}

TEST_CASE("the U1-not-U3 model has a flat phiB-connection despite leaving U3") {
    // All three phi-Kaehler-type flags hold (R' = 0) while U3 fails; the
    // equivalence entry in the xi-curvature check records the breakdown.
    const AlgebraModel m = u1_not_u3_model();
    const Connection lc = levi_civita(m);
    const CurvatureAnalysis analysis = phib_curvature(m, phib_connection(m, lc));
    CHECK(analysis.r_prime.is_zero());
    CHECK(analysis.kaehler_flags.pair_antisymmetries);
    CHECK(analysis.kaehler_flags.cyclic_zero);
    CHECK(analysis.kaehler_flags.phi_anti_invariant);
    REQUIRE_FALSE(classify(m).u3);
    const Report report = xi_curvature_check(m, curvature_tensor(m, lc), lc);
    // Both the xi-identity and U3 fail here, so the equivalence entry holds;
    // what this model breaks is "all flags true implies U3".
    const CheckEntry* eq = report.find("equivalence: xi-identity <-> U3");
    REQUIRE(eq != nullptr);
    CHECK(eq->pass);
    const CheckEntry* xi_id = report.find(
        "R(x,y,z,xi) = eta(x)g(nabla_y xi,nabla_z xi) - eta(y)g(nabla_x xi,nabla_z xi)");
    REQUIRE(xi_id != nullptr);
    CHECK_FALSE(xi_id->pass);
}

TEST_CASE("U3 example: all three flags plus the cyclic entry") {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    const Report report = xi_curvature_check(m, curvature_tensor(m, lc), lc);
    const CheckEntry* cyc = report.find("U3 implies cyclic sum of R' vanishes");
    REQUIRE(cyc != nullptr);
    CHECK(cyc->pass);
}
