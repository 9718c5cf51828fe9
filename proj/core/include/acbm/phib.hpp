#pragma once

#include <map>

#include "acbm/classification.hpp"
#include "acbm/identities.hpp"

namespace acbm {

/// The phiB-connection, the natural connection
/// nabla'_x y = nabla_x y + 1/2{(nabla_x phi)phi y + (nabla_x eta)y . xi} - eta(y) nabla_x xi.
Connection phib_connection(const AlgebraModel& m, const Connection& lc);

/// The reduced form valid on class U:
/// nabla'_x y = nabla_x y + (nabla_x eta)y . xi - eta(y) nabla_x xi.
/// Refuses (PreconditionError with the class report) when the model is not in U.
Connection phib_connection_u_form(const AlgebraModel& m, const Connection& lc);

/// Lowered potential Q(x,y,z) = g(nabla'_x y - nabla_x y, z).
Tensor potential_tensor(const AlgebraModel& m, const Connection& lc, const Connection& np);

struct TorsionAnalysis {
    Tensor torsion;  // lowered (0,3), antisymmetric in the first two slots
    Tensor t;        // t(x)    = g^{ij} T(x, e_i, e_j)
    Tensor t_star;   // t*(x)   = g^{ij} T(x, e_i, phi e_j)
    Tensor t_hat;    // t-hat(x) = T(x, xi, xi)
    std::map<std::string, IdentityCheck> class_verdicts;
};

/// Torsion of the phiB-connection, built twice (commutator definition and the
/// closed F-expression) and cross-checked; a mismatch throws InternalError.
TorsionAnalysis torsion_analysis(const AlgebraModel& m, const Connection& np);

/// Torsion of an arbitrary connection from the commutator definition only.
Tensor torsion_tensor(const AlgebraModel& m, const Connection& conn);

/// Closed-form torsion of the phiB-connection from F and the structure maps.
Tensor torsion_from_fundamental(const AlgebraModel& m, const Connection& lc);

/// Theorem-style torsion class predicates, all exact and universally
/// quantified: the ten single classes, the vertical-structure identity and
/// the derived direct-sum sets for U, U1, U2, U3.
std::map<std::string, IdentityCheck> torsion_class_checks(const AlgebraModel& m, const Tensor& T);

/// Torsion identity suite gated by class membership: the four U3 identities,
/// plus the cyclic-sum and potential-transpose checks (U1) and the
/// phi-commutation of nabla xi (U2). Refuses when no block applies.
Report u3_torsion_properties(const AlgebraModel& m, const Tensor& T);

}  // namespace acbm
