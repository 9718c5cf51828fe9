#pragma once

#include <optional>
#include <string>

#include "acbm/model.hpp"

namespace acbm {

/// Universally quantified exact identity verdict with the first failing
/// index tuple (zero-based) and its residual polynomial.
struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::optional<std::vector<int>> witness;
    std::string residual;

    std::string witness_text() const;
};

/// Passes iff every component of `residual` is zero.
IdentityCheck check_zero(std::string name, const Tensor& residual);

// --- torsion identities (T is the lowered rank-3 torsion) ------------------

/// T(x,y,z) = eta(x)T(xi,y,z) - eta(y)T(xi,x,z) + eta(z)T(xi,x,y) - eta(z)T(xi,y,x)
IdentityCheck torsion_vertical_structure(const AlgebraModel& m, const Tensor& T);
/// T(x,y,xi) = 0
IdentityCheck torsion_xi_output_zero(const AlgebraModel& m, const Tensor& T);
/// T(xi,y,z) = T(xi,z,y)
IdentityCheck torsion_xi_symmetric(const AlgebraModel& m, const Tensor& T);
/// T(xi,phi y,phi z) = -T(xi,y,z)
IdentityCheck torsion_xi_phi_anti(const AlgebraModel& m, const Tensor& T);
/// T(phi x,y,z) + T(x,phi y,z) - T(x,y,phi z) = 0
IdentityCheck torsion_phi_shuffle(const AlgebraModel& m, const Tensor& T);
/// T(x,y,z) + T(phi x,y,phi z) + T(x,phi y,phi z) = 0
IdentityCheck torsion_phi_pair(const AlgebraModel& m, const Tensor& T);
/// T(x,phi y,phi z) = T(x,phi z,phi y)
IdentityCheck torsion_phi_args_symmetric(const AlgebraModel& m, const Tensor& T);
/// T(x,y,z) - T(x,z,y) = eta(y)T(x,xi,z) - eta(z)T(x,xi,y)
IdentityCheck torsion_tail_antisymmetry(const AlgebraModel& m, const Tensor& T);
/// cyclic sum of T over the first three slots vanishes
IdentityCheck torsion_cyclic_zero(const AlgebraModel& m, const Tensor& T);
/// Q(x,y,z) = T(z,y,x)
IdentityCheck potential_is_torsion_transpose(const AlgebraModel& m, const Tensor& Q, const Tensor& T);

// --- connection identities --------------------------------------------------

/// nabla_{phi x} xi = phi(nabla_x xi); `nx` is the (1,1) tensor of nabla xi.
IdentityCheck nabla_xi_phi_commutes(const AlgebraModel& m, const Tensor& nx);

/// All four parallelism checks for a connection: nabla phi, xi, eta, g.
Report naturality_checks(const AlgebraModel& m, const Connection& conn);

/// Potential properties: Q(x,y,phi z) - Q(x,phi y,z) = F(x,y,z) and
/// Q(x,y,z) = -Q(x,z,y). Q and F are lowered rank-3 tensors.
Report potential_checks(const AlgebraModel& m, const Tensor& Q, const Tensor& F);

// --- curvature-like identities ----------------------------------------------

/// L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)
IdentityCheck curvature_pair_antisymmetries(const Tensor& L);
/// cyclic sum over the first three slots vanishes
IdentityCheck curvature_cyclic_zero(const Tensor& L);
/// L(x,y,phi z,phi w) = -L(x,y,z,w)
IdentityCheck curvature_phi_anti_invariance(const AlgebraModel& m, const Tensor& L);
/// R(x,y,z,xi) = eta(x)g(nabla_y xi,nabla_z xi) - eta(y)g(nabla_x xi,nabla_z xi)
IdentityCheck curvature_xi_identity(const AlgebraModel& m, const Tensor& R, const Tensor& nx);

}  // namespace acbm
