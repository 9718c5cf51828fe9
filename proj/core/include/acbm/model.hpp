#pragma once

#include <map>
#include <vector>

#include "acbm/report.hpp"
#include "acbm/tensor.hpp"

namespace acbm {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// A (2n+1)-dimensional Lie algebra carrying an almost contact B-metric
/// structure in a fixed left-invariant frame. Structure constants may carry
/// parameters; g, phi, xi, eta are parameter-free rationals, which keeps the
/// inverse metric inside the polynomial ring.
class AlgebraModel {
  public:
    /// `c` holds the structure constants as a (1,2) tensor: bracket of
    /// (e_i, e_j) has e_k-component c.at({k,i,j}). Throws StructuralError for
    /// inconsistent shapes, a non-symmetric or singular metric.
    AlgebraModel(int n, ParamSetPtr params, Tensor c, RationalMatrix g, RationalMatrix phi,
                 RationalVector xi, RationalVector eta);

    int n() const { return n_; }
    int dim() const { return 2 * n_ + 1; }
    const ParamSetPtr& params() const { return params_; }

    const Tensor& structure_constants() const { return c_; }
    const Poly& c(int k, int i, int j) const { return c_.at({k, i, j}); }

    const RationalMatrix& metric() const { return g_; }
    const RationalMatrix& metric_inverse() const { return g_inv_; }
    const RationalMatrix& phi() const { return phi_; }
    const RationalVector& xi() const { return xi_; }
    const RationalVector& eta() const { return eta_; }

    Tensor metric_tensor() const;          // (0,2)
    Tensor metric_inverse_tensor() const;  // (2,0)
    Tensor phi_tensor() const;             // (1,1)
    Tensor eta_tensor() const;             // (0,1)

  private:
    int n_;
    ParamSetPtr params_;
    Tensor c_;
    RationalMatrix g_;
    RationalMatrix g_inv_;
    RationalMatrix phi_;
    RationalVector xi_;
    RationalVector eta_;
};

/// Frame coefficients of an affine connection: nabla_{e_i} e_j has
/// e_k-component gamma.at({k,i,j}).
struct Connection {
    Tensor gamma;
};

/// Exact inverse of a rational matrix (Gauss-Jordan). Throws StructuralError
/// when singular.
RationalMatrix invert(const RationalMatrix& m);

/// Checks the five structure axioms, the eta/metric duality, bracket
/// antisymmetry and the (n, n+1) metric signature. Failures are entries,
/// not exceptions.
Report validate_structure(const AlgebraModel& m);

/// Checks the Jacobi identity for all basis triples.
Report check_jacobi(const AlgebraModel& m);

/// Instantiates parameters; the result lives over the remaining names.
AlgebraModel bind_parameters(const AlgebraModel& m, const std::map<std::string, Rational>& bindings);

}  // namespace acbm
