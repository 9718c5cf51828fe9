#pragma once

#include "acbm/phib.hpp"

namespace acbm {

struct KaehlerFlags {
    bool pair_antisymmetries = false;  // L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)
    bool cyclic_zero = false;          // cyclic sum over x,y,z vanishes
    bool phi_anti_invariant = false;   // L(x,y,phi z,phi w) = -L(x,y,z,w)
};

struct CurvatureAnalysis {
    Tensor r_prime;  // lowered (0,4) curvature of the phiB-connection
    Poly tau_prime;
    Poly tau_prime_star;
    KaehlerFlags kaehler_flags;
};

/// Curvature-like property flags, each universally quantified over the frame.
KaehlerFlags kaehler_type_flags(const Tensor& L, const AlgebraModel& m);

/// Curvature of the phiB-connection, built from the commutator definition and
/// cross-checked against the potential-based expansion
/// R'(x,y,z,w) = R + (nabla_x Q)(y,z,w) - (nabla_y Q)(x,z,w)
///             + g(Q(x,z),Q(y,w)) - g(Q(y,z),Q(x,w)).
/// A mismatch throws InternalError.
CurvatureAnalysis phib_curvature(const AlgebraModel& m, const Connection& np);

/// Potential-based construction alone (for oracle-equivalence checks).
Tensor phib_curvature_from_potential(const AlgebraModel& m, const Connection& lc, const Connection& np);

/// Class-U curvature identities:
///   R'(x,y,z,w) = R(x,y,phi^2 z,phi^2 w) - (nabla_x eta)z (nabla_y eta)w
///               + (nabla_y eta)z (nabla_x eta)w
///   tau' = tau - 2 rho(xi,xi) - |nabla xi|^2
/// Refuses when the model is not in U.
Report curvature_u_identities(const AlgebraModel& m, const Tensor& R, const Connection& lc,
                              const CurvatureAnalysis& analysis);

/// The U1 check tying the curvature-xi identity to U3 membership, plus the
/// phi-Kaehler-type flags of R'. Reports both sides of the equivalence and an
/// explicit consistency entry. Refuses when the model is not in U1.
Report xi_curvature_check(const AlgebraModel& m, const Tensor& R, const Connection& lc);

}  // namespace acbm
