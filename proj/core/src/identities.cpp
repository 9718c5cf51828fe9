#include "acbm/identities.hpp"

#include "acbm/errors.hpp"
#include "acbm/geometry.hpp"

namespace acbm {

std::string IdentityCheck::witness_text() const {
    if (!witness) return {};
    return witness_string(*witness, residual);
}

IdentityCheck check_zero(std::string name, const Tensor& residual) {
    IdentityCheck out{std::move(name), true, std::nullopt, {}};
    for_each_index(residual.dim(), residual.rank(), [&](std::span<const int> idx) {
        if (!out.pass) return;
        const Poly& p = residual.at(idx);
        if (!p.is_zero()) {
            out.pass = false;
            out.witness = std::vector<int>(idx.begin(), idx.end());
            out.residual = p.to_string();
        }
    });
    return out;
}

namespace {

void require_torsion_shape(const Tensor& T) {
    if (T.rank() != 3 || T.slot(0) != Slot::Covariant || T.slot(1) != Slot::Covariant ||
        T.slot(2) != Slot::Covariant)
        throw StructuralError("expected a rank-3 covariant torsion tensor");
}

}  // namespace

IdentityCheck torsion_vertical_structure(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const int d = m.dim();
    const Tensor txi = plug(T, 0, m.xi());  // T(xi,.,.)
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = T.at(idx);
        s -= txi.at({y, z}) * m.eta()[static_cast<std::size_t>(x)];
        s += txi.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        s -= (txi.at({x, y}) - txi.at({y, x})) * m.eta()[static_cast<std::size_t>(z)];
        residual.at(idx) = std::move(s);
    });
    return check_zero("T(x,y,z) = eta(x)T(xi,y,z) - eta(y)T(xi,x,z) + eta(z){T(xi,x,y) - T(xi,y,x)}",
                      residual);
}

IdentityCheck torsion_xi_output_zero(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    return check_zero("T(x,y,xi) = 0", plug(T, 2, m.xi()));
}

IdentityCheck torsion_xi_symmetric(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const int d = m.dim();
    const Tensor txi = plug(T, 0, m.xi());
    Tensor residual(d, {Slot::Covariant, Slot::Covariant}, T.params());
    for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) residual.at({y, z}) = txi.at({y, z}) - txi.at({z, y});
    return check_zero("T(xi,y,z) = T(xi,z,y)", residual);
}

IdentityCheck torsion_xi_phi_anti(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const Tensor phi = m.phi_tensor();
    const Tensor txi = plug(T, 0, m.xi());
    Tensor residual = apply_phi_slot(apply_phi_slot(txi, 0, phi), 1, phi) + txi;
    return check_zero("T(xi,phi y,phi z) = -T(xi,y,z)", residual);
}

IdentityCheck torsion_phi_shuffle(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const Tensor phi = m.phi_tensor();
    Tensor residual = apply_phi_slot(T, 0, phi) + apply_phi_slot(T, 1, phi) - apply_phi_slot(T, 2, phi);
    return check_zero("T(phi x,y,z) + T(x,phi y,z) - T(x,y,phi z) = 0", residual);
}

IdentityCheck torsion_phi_pair(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const Tensor phi = m.phi_tensor();
    Tensor residual = T + apply_phi_slot(apply_phi_slot(T, 0, phi), 2, phi) +
                      apply_phi_slot(apply_phi_slot(T, 1, phi), 2, phi);
    return check_zero("T(x,y,z) + T(phi x,y,phi z) + T(x,phi y,phi z) = 0", residual);
}

IdentityCheck torsion_phi_args_symmetric(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const int d = m.dim();
    const Tensor tpp = apply_phi_slot(apply_phi_slot(T, 1, m.phi_tensor()), 2, m.phi_tensor());
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        residual.at(idx) = tpp.at(idx) - tpp.at({idx[0], idx[2], idx[1]});
    });
    return check_zero("T(x,phi y,phi z) = T(x,phi z,phi y)", residual);
}

IdentityCheck torsion_tail_antisymmetry(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    const int d = m.dim();
    const Tensor t_mid_xi = plug(T, 1, m.xi());  // T(x,xi,z)
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = T.at(idx) - T.at({x, z, y});
        s -= t_mid_xi.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        s += t_mid_xi.at({x, y}) * m.eta()[static_cast<std::size_t>(z)];
        residual.at(idx) = std::move(s);
    });
    return check_zero("T(x,y,z) - T(x,z,y) = eta(y)T(x,xi,z) - eta(z)T(x,xi,y)", residual);
}

IdentityCheck torsion_cyclic_zero(const AlgebraModel& m, const Tensor& T) {
    require_torsion_shape(T);
    (void)m;
    return check_zero("cyclic sum of T = 0", cyclic_sum(T));
}

IdentityCheck potential_is_torsion_transpose(const AlgebraModel& m, const Tensor& Q, const Tensor& T) {
    require_torsion_shape(T);
    const int d = m.dim();
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        residual.at(idx) = Q.at(idx) - T.at({idx[2], idx[1], idx[0]});
    });
    return check_zero("Q(x,y,z) = T(z,y,x)", residual);
}

IdentityCheck nabla_xi_phi_commutes(const AlgebraModel& m, const Tensor& nx) {
    const int d = m.dim();
    const auto& phi = m.phi();
    Tensor residual(d, {Slot::Contravariant, Slot::Covariant}, nx.params());
    for (int x = 0; x < d; ++x)
        for (int k = 0; k < d; ++k) {
            Poly s = Poly::zero(nx.params());
            for (int p = 0; p < d; ++p) {
                if (phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)] != 0)
                    s += nx.at({k, p}) * phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(x)];
                if (phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] != 0)
                    s -= nx.at({p, x}) * phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
            }
            residual.at({k, x}) = std::move(s);
        }
    return check_zero("nabla_{phi x} xi = phi(nabla_x xi)", residual);
}

Report naturality_checks(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    Report report;
    const auto& phi = m.phi();
    const auto& g = m.metric();

    {
        Tensor residual(d, {Slot::Contravariant, Slot::Covariant, Slot::Covariant}, m.params());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Poly s = Poly::zero(m.params());
                    for (int p = 0; p < d; ++p) {
                        if (phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] != 0)
                            s += conn.gamma.at({k, i, p}) * phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                        if (phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] != 0)
                            s -= conn.gamma.at({p, i, j}) * phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                    }
                    residual.at({k, i, j}) = std::move(s);
                }
        auto c = check_zero("nabla phi = 0", residual);
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    {
        auto c = check_zero("nabla xi = 0", nabla_xi(m, conn));
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    {
        Tensor residual(d, {Slot::Covariant, Slot::Covariant}, m.params());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Poly s = Poly::zero(m.params());
                for (int k = 0; k < d; ++k) {
                    if (m.eta()[static_cast<std::size_t>(k)] == 0) continue;
                    s -= conn.gamma.at({k, i, j}) * m.eta()[static_cast<std::size_t>(k)];
                }
                residual.at({i, j}) = std::move(s);
            }
        auto c = check_zero("nabla eta = 0", residual);
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    {
        Tensor residual(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Poly s = Poly::zero(m.params());
                    for (int mm = 0; mm < d; ++mm) {
                        const Rational gm1 = g[static_cast<std::size_t>(mm)][static_cast<std::size_t>(k)];
                        const Rational gm2 = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(mm)];
                        if (gm1 != 0) s -= conn.gamma.at({mm, i, j}) * gm1;
                        if (gm2 != 0) s -= conn.gamma.at({mm, i, k}) * gm2;
                    }
                    residual.at({i, j, k}) = std::move(s);
                }
        auto c = check_zero("nabla g = 0", residual);
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    return report;
}

Report potential_checks(const AlgebraModel& m, const Tensor& Q, const Tensor& F) {
    const int d = m.dim();
    Report report;
    const Tensor phi = m.phi_tensor();
    {
        Tensor residual = apply_phi_slot(Q, 2, phi) - apply_phi_slot(Q, 1, phi) - F;
        auto c = check_zero("Q(x,y,phi z) - Q(x,phi y,z) = F(x,y,z)", residual);
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    {
        Tensor residual(d, Q.slots(), Q.params());
        for_each_index(d, 3, [&](std::span<const int> idx) {
            residual.at(idx) = Q.at(idx) + Q.at({idx[0], idx[2], idx[1]});
        });
        auto c = check_zero("Q(x,y,z) = -Q(x,z,y)", residual);
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    }
    return report;
}

IdentityCheck curvature_pair_antisymmetries(const Tensor& L) {
    const int d = L.dim();
    Tensor residual(d, L.slots(), L.params());
    for_each_index(d, 4, [&](std::span<const int> idx) {
        residual.at(idx) = L.at(idx) + L.at({idx[1], idx[0], idx[2], idx[3]});
    });
    auto first = check_zero("L(x,y,z,w) = -L(y,x,z,w) = -L(x,y,w,z)", residual);
    if (!first.pass) return first;
    for_each_index(d, 4, [&](std::span<const int> idx) {
        residual.at(idx) = L.at(idx) + L.at({idx[0], idx[1], idx[3], idx[2]});
    });
    auto second = check_zero(first.name, residual);
    return second;
}

IdentityCheck curvature_cyclic_zero(const Tensor& L) {
    return check_zero("cyclic sum of L = 0", cyclic_sum(L));
}

IdentityCheck curvature_phi_anti_invariance(const AlgebraModel& m, const Tensor& L) {
    const Tensor phi = m.phi_tensor();
    Tensor residual = apply_phi_slot(apply_phi_slot(L, 2, phi), 3, phi) + L;
    return check_zero("L(x,y,phi z,phi w) = -L(x,y,z,w)", residual);
}

IdentityCheck curvature_xi_identity(const AlgebraModel& m, const Tensor& R, const Tensor& nx) {
    const int d = m.dim();
    const auto& g = m.metric();
    // gram(y,z) = g(nabla_y xi, nabla_z xi)
    Tensor gram(d, {Slot::Covariant, Slot::Covariant}, R.params());
    for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
            Poly s = Poly::zero(R.params());
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const Rational gab = g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (gab == 0) continue;
                    s += nx.at({a, y}) * nx.at({b, z}) * gab;
                }
            gram.at({y, z}) = std::move(s);
        }
    const Tensor r_xi = plug(R, 3, m.xi());  // R(x,y,z,xi)
    Tensor residual(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, R.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = r_xi.at(idx);
        s -= gram.at({y, z}) * m.eta()[static_cast<std::size_t>(x)];
        s += gram.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        residual.at(idx) = std::move(s);
    });
    return check_zero("R(x,y,z,xi) = eta(x)g(nabla_y xi,nabla_z xi) - eta(y)g(nabla_x xi,nabla_z xi)",
                      residual);
}

}  // namespace acbm
