#include <doctest.h>

#include "acbm/manifold_spec.hpp"
#include "test_models.hpp"

using namespace acbm;
using namespace acbm::testing;

TEST_CASE("example family is F6") {
    const ClassReport cls = classify(build_example());
    CHECK_FALSE(cls.f0);
    CHECK(cls.u);
    CHECK(cls.u1);
    CHECK(cls.u2);
    CHECK(cls.u3);
    CHECK(cls.sub_label == SubLabel::F6);
    CHECK(cls.note.empty());
}

TEST_CASE("abelian compatible structure is F0") {
    Brackets b(empty_param_set());
    const ClassReport cls = classify(standard_model(std::move(b.c)));
    CHECK(cls.f0);
    CHECK(cls.u);
    CHECK(cls.u1);
    CHECK(cls.u2);
    CHECK(cls.u3);
    CHECK(cls.sub_label == SubLabel::F6);
}

TEST_CASE("perturbing a bracket coefficient breaks the F(x,y,xi) symmetry") {
    const AlgebraModel m = mutated_example_model();
    const ClassReport cls = classify(m);
    CHECK_FALSE(cls.u3);
    // The symmetry scan must carry a witness.
    bool found = false;
    for (const auto& f : cls.failed_identities)
        if (f.identity == "F(x,y,xi) = F(y,x,xi)") found = true;
    CHECK(found);
    // Independent oracle: scan F(e_i,e_j,xi) - F(e_j,e_i,xi) directly; the
    // first asymmetric pair is (1,4) with value 1/2.
    const Tensor F = fundamental_tensor(m, levi_civita(m));
    const Tensor fxi = plug(F, 2, m.xi());
    Poly delta = fxi.at({0, 3}) - fxi.at({3, 0});
    CHECK(delta.constant_value() == Rational(1, 2));
}

TEST_CASE("the [e1,xi]=e1 model is U1 but not U2/U3") {
    const ClassReport cls = classify(u1_not_u3_model());
    CHECK_FALSE(cls.f0);
    CHECK(cls.u);
    CHECK(cls.u1);
    CHECK_FALSE(cls.u2);
    CHECK_FALSE(cls.u3);
    CHECK(cls.sub_label == SubLabel::NotApplicable);
    // theta = 0 and theta* != 0 here, so the U1-reading would suggest F5.
    CHECK(cls.note.find("F5") != std::string::npos);
}

TEST_CASE("heisenberg-like model is not in U") {
    const ClassReport cls = classify(heisenberg_model());
    CHECK_FALSE(cls.u);
    CHECK_FALSE(cls.u1);
    CHECK_FALSE(cls.u2);
    CHECK_FALSE(cls.u3);
    CHECK(cls.sub_label == SubLabel::NotApplicable);
}

TEST_CASE("membership lattice invariants hold on every tested model") {
    std::mt19937_64 rng(404);
    std::vector<AlgebraModel> models;
    models.push_back(build_example());
    models.push_back(heisenberg_model());
    models.push_back(u1_not_u3_model());
    models.push_back(mutated_example_model());
    for (int i = 0; i < 6; ++i) models.push_back(random_b_family_model(rng));
    for (int i = 0; i < 3; ++i) models.push_back(random_example_instance(rng));
    for (const auto& m : models) {
        const ClassReport cls = classify(m);
        if (cls.u3) CHECK((cls.u1 && cls.u2));
        if (cls.u1 || cls.u2) CHECK(cls.u);
        if (cls.f0) {
            CHECK((cls.u && cls.u1 && cls.u2 && cls.u3));
            CHECK(cls.sub_label == SubLabel::F6);
        }
        if (!cls.u3) CHECK(cls.sub_label == SubLabel::NotApplicable);
    }
}

TEST_CASE("classification is invariant under renaming parameters") {
    // Same family with l1 renamed to a (single symbolic parameter).
    const AlgebraModel m = build_example();
    ManifoldSpec spec = to_spec(m);
    for (auto& name : spec.parameters)
        if (name == "l1") name = "a";
    for (auto& b : spec.brackets) {
        std::string replaced;
        for (std::size_t i = 0; i < b.value.size();) {
            if (b.value.compare(i, 2, "l1") == 0) {
                replaced += "a";
                i += 2;
            } else {
                replaced += b.value[i];
                ++i;
            }
        }
        b.value = replaced;
    }
    const ClassReport renamed = classify(to_model(spec));
    const ClassReport original = classify(m);
    CHECK(renamed.f0 == original.f0);
    CHECK(renamed.u == original.u);
    CHECK(renamed.u1 == original.u1);
    CHECK(renamed.u2 == original.u2);
    CHECK(renamed.u3 == original.u3);
    CHECK(renamed.sub_label == original.sub_label);
}

TEST_CASE("F0 forces the phiB-connection to coincide with Levi-Civita") {
    Brackets b(empty_param_set());
    const AlgebraModel m = standard_model(std::move(b.c));
    REQUIRE(classify(m).f0);
    const Connection lc = levi_civita(m);
    const Connection np = phib_connection(m, lc);
    CHECK(np.gamma == lc.gamma);
    CHECK(torsion_tensor(m, np).is_zero());
}
