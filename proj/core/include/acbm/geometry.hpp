#pragma once

#include "acbm/model.hpp"

namespace acbm {

/// Levi-Civita connection from the Koszul formula for left-invariant fields:
/// 2g(nabla_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
Connection levi_civita(const AlgebraModel& m);

/// (1,1) tensor N with N.at({k,i}) = (nabla_{e_i} xi)^k.
Tensor nabla_xi(const AlgebraModel& m, const Connection& conn);

/// Fundamental (0,3) tensor F(x,y,z) = g((nabla_x phi)y, z).
Tensor fundamental_tensor(const AlgebraModel& m, const Connection& conn);

struct LeeForms {
    Tensor theta;       // theta(z) = g^{ij} F(e_i, e_j, z)
    Tensor theta_star;  // theta*(z) = g^{ij} F(e_i, phi e_j, z)
    Tensor omega;       // omega(z) = F(xi, xi, z)
};
LeeForms lee_forms(const AlgebraModel& m, const Tensor& F);

/// d eta(x,y) = (nabla_x eta)y - (nabla_y eta)x, antisymmetric (0,2).
Tensor d_eta(const AlgebraModel& m, const Connection& conn);

/// Lowered curvature R(x,y,z,w) = g(([nabla,nabla] - nabla_[,])z, w).
Tensor curvature_tensor(const AlgebraModel& m, const Connection& conn);

struct ScalarCurvatures {
    Poly tau;        // g^{ij} g^{kl} R(e_k, e_i, e_j, e_l)
    Poly tau_star;   // g^{ij} g^{kl} R(e_k, e_i, e_j, phi e_l)
    Tensor ricci;    // rho(x,y) = g^{kl} R(e_k, x, y, e_l)
    Poly nabla_xi_norm2;  // g^{ij} g(nabla_{e_i} xi, nabla_{e_j} xi)
};
ScalarCurvatures scalar_curvatures(const AlgebraModel& m, const Tensor& R, const Connection& lc);

/// Covariant derivative of a fully covariant tensor; frame components are
/// constant so only the connection terms contribute. The derivative slot is
/// prepended: (nabla t).at({i, j...}) = (nabla_{e_i} t)(e_j...).
Tensor covariant_derivative(const AlgebraModel& m, const Connection& conn, const Tensor& t);

}  // namespace acbm
