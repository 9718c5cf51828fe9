#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "acbm/curvature.hpp"

namespace acbm {

/// Parameters of the built-in 5-dimensional F6 Lie group family. Unbound
/// entries stay symbolic.
struct ExampleParams {
    std::optional<Rational> l1, l2, l3, l4, m1, m3;

    static ExampleParams symbolic() { return {}; }
    static ExampleParams all(const Rational& v) {
        ExampleParams p;
        p.l1 = p.l2 = p.l3 = p.l4 = p.m1 = p.m3 = v;
        return p;
    }
    std::map<std::string, Rational> bound() const;
};

/// Builds the F6 family: phi e1 = e3, phi e2 = e4, phi e3 = -e1,
/// phi e4 = -e2, xi = e5, g = diag(1,1,-1,-1,1), brackets [e_i, xi] linear in
/// the six parameters, all other brackets zero.
AlgebraModel build_example(const ExampleParams& p = {});

/// Runs the eight named claims about the built-in family: class membership,
/// the nabla-xi table, the phiB component table, the torsion table, flatness
/// of the phiB-connection, parallelism of its torsion, the scalar-curvature
/// identity and the torsion identity suite. Failures carry witnesses.
Report verify_paper_claims(const ExampleParams& p = {});

/// Identity suite valid for any structurally sound model: the four
/// parallelism checks of the phiB-connection, the two potential properties,
/// and the two dual-construction agreements (torsion, curvature).
Report natural_connection_suite(const AlgebraModel& m);

/// Uniform random rational with numerator in [-12,12], denominator in [1,8].
Rational random_rational(std::mt19937_64& rng);

/// One random binding per parameter of `params`.
std::map<std::string, Rational> random_bindings(const ParamSet& params, std::mt19937_64& rng);

}  // namespace acbm
