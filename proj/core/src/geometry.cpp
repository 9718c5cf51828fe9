#include "acbm/geometry.hpp"

#include "acbm/errors.hpp"

namespace acbm {

Connection levi_civita(const AlgebraModel& m) {
    const int d = m.dim();
    const auto& g = m.metric();
    const auto& ginv = m.metric_inverse();
    Tensor gamma(d, {Slot::Contravariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            // K_l = g([e_i,e_j],e_l) - g([e_j,e_l],e_i) + g([e_l,e_i],e_j)
            std::vector<Poly> K(static_cast<std::size_t>(d), Poly::zero(m.params()));
            for (int l = 0; l < d; ++l) {
                Poly s = Poly::zero(m.params());
                for (int mm = 0; mm < d; ++mm) {
                    s += m.c(mm, i, j) * g[static_cast<std::size_t>(mm)][static_cast<std::size_t>(l)];
                    s -= m.c(mm, j, l) * g[static_cast<std::size_t>(mm)][static_cast<std::size_t>(i)];
                    s += m.c(mm, l, i) * g[static_cast<std::size_t>(mm)][static_cast<std::size_t>(j)];
                }
                K[static_cast<std::size_t>(l)] = std::move(s);
            }
            for (int k = 0; k < d; ++k) {
                Poly s = Poly::zero(m.params());
                for (int l = 0; l < d; ++l)
                    s += K[static_cast<std::size_t>(l)] * ginv[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                s *= Rational(1, 2);
                gamma.at({k, i, j}) = std::move(s);
            }
        }
    }
    return Connection{std::move(gamma)};
}

Tensor nabla_xi(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    Tensor out(d, {Slot::Contravariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            Poly s = Poly::zero(m.params());
            for (int mm = 0; mm < d; ++mm) {
                if (m.xi()[static_cast<std::size_t>(mm)] == 0) continue;
                s += conn.gamma.at({k, i, mm}) * m.xi()[static_cast<std::size_t>(mm)];
            }
            out.at({k, i}) = std::move(s);
        }
    return out;
}

Tensor fundamental_tensor(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    const auto& g = m.metric();
    const auto& phi = m.phi();
    Tensor F(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            // (nabla_{e_i} phi) e_j = nabla_i (phi e_j) - phi(nabla_i e_j)
            std::vector<Poly> v(static_cast<std::size_t>(d), Poly::zero(m.params()));
            for (int k = 0; k < d; ++k) {
                Poly s = Poly::zero(m.params());
                for (int p = 0; p < d; ++p) {
                    if (phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] != 0)
                        s += conn.gamma.at({k, i, p}) * phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                    if (phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] != 0)
                        s -= conn.gamma.at({p, i, j}) * phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                }
                v[static_cast<std::size_t>(k)] = std::move(s);
            }
            for (int l = 0; l < d; ++l) {
                Poly s = Poly::zero(m.params());
                for (int k = 0; k < d; ++k)
                    s += v[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                F.at({i, j, l}) = std::move(s);
            }
        }
    }
    return F;
}

LeeForms lee_forms(const AlgebraModel& m, const Tensor& F) {
    if (F.rank() != 3) throw StructuralError("lee forms need a rank-3 covariant tensor");
    const Tensor ginv = m.metric_inverse_tensor();
    Tensor theta = contract(F, 0, 1, ginv);
    Tensor fphi = apply_phi_slot(F, 1, m.phi_tensor());
    Tensor theta_star = contract(fphi, 0, 1, ginv);
    Tensor omega = plug(plug(F, 0, m.xi()), 0, m.xi());
    return LeeForms{std::move(theta), std::move(theta_star), std::move(omega)};
}

Tensor d_eta(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    Tensor out(d, {Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // (nabla_i eta)(e_j) = -sum_k Gamma^k_{ij} eta_k
            Poly s = Poly::zero(m.params());
            for (int k = 0; k < d; ++k) {
                if (m.eta()[static_cast<std::size_t>(k)] == 0) continue;
                s -= conn.gamma.at({k, i, j}) * m.eta()[static_cast<std::size_t>(k)];
                s += conn.gamma.at({k, j, i}) * m.eta()[static_cast<std::size_t>(k)];
            }
            out.at({i, j}) = std::move(s);
        }
    return out;
}

Tensor curvature_tensor(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    const auto& g = m.metric();
    Tensor R(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                // R(e_i,e_j)e_k, upper index l
                std::vector<Poly> v(static_cast<std::size_t>(d), Poly::zero(m.params()));
                for (int l = 0; l < d; ++l) {
                    Poly s = Poly::zero(m.params());
                    for (int mm = 0; mm < d; ++mm) {
                        s += conn.gamma.at({mm, j, k}) * conn.gamma.at({l, i, mm});
                        s -= conn.gamma.at({mm, i, k}) * conn.gamma.at({l, j, mm});
                        s -= m.c(mm, i, j) * conn.gamma.at({l, mm, k});
                    }
                    v[static_cast<std::size_t>(l)] = std::move(s);
                }
                for (int w = 0; w < d; ++w) {
                    Poly s = Poly::zero(m.params());
                    for (int l = 0; l < d; ++l)
                        s += v[static_cast<std::size_t>(l)] * g[static_cast<std::size_t>(l)][static_cast<std::size_t>(w)];
                    R.at({i, j, k, w}) = std::move(s);
                }
            }
    return R;
}

ScalarCurvatures scalar_curvatures(const AlgebraModel& m, const Tensor& R, const Connection& lc) {
    if (R.rank() != 4) throw StructuralError("scalar curvatures need a rank-4 covariant tensor");
    const int d = m.dim();
    const auto& ginv = m.metric_inverse();
    const auto& g = m.metric();

    // rho(x,y) = g^{kl} R(e_k, x, y, e_l)
    Tensor ricci(d, {Slot::Covariant, Slot::Covariant}, m.params());
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            Poly s = Poly::zero(m.params());
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    if (ginv[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] == 0) continue;
                    s += R.at({k, x, y, l}) * ginv[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                }
            ricci.at({x, y}) = std::move(s);
        }

    Poly tau = Poly::zero(m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
            tau += ricci.at({i, j}) * ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }

    Poly tau_star = Poly::zero(m.params());
    const auto& phi = m.phi();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    const Rational wij = ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const Rational wkl = ginv[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                    if (wij == 0 || wkl == 0) continue;
                    for (int p = 0; p < d; ++p) {
                        const Rational f = phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)];
                        if (f == 0) continue;
                        tau_star += R.at({k, i, j, p}) * (wij * wkl * f);
                    }
                }

    const Tensor nx = nabla_xi(m, lc);
    Poly norm2 = Poly::zero(m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational wij = ginv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (wij == 0) continue;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const Rational gab = g[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                    if (gab == 0) continue;
                    norm2 += nx.at({a, i}) * nx.at({b, j}) * (wij * gab);
                }
        }

    return ScalarCurvatures{std::move(tau), std::move(tau_star), std::move(ricci), std::move(norm2)};
}

Tensor covariant_derivative(const AlgebraModel& m, const Connection& conn, const Tensor& t) {
    for (int s = 0; s < t.rank(); ++s)
        if (t.slot(s) != Slot::Covariant)
            throw StructuralError("covariant derivative implemented for covariant tensors");
    const int d = m.dim();
    std::vector<Slot> slots;
    slots.push_back(Slot::Covariant);
    for (int s = 0; s < t.rank(); ++s) slots.push_back(t.slot(s));
    Tensor out(d, slots, t.params());
    for_each_index(d, t.rank() + 1, [&](std::span<const int> idx) {
        const int i = idx[0];
        Poly s = Poly::zero(t.params());
        std::vector<int> inner(idx.begin() + 1, idx.end());
        std::vector<int> probe = inner;
        for (int slot = 0; slot < t.rank(); ++slot) {
            const int j = inner[static_cast<std::size_t>(slot)];
            for (int mm = 0; mm < d; ++mm) {
                const Poly& gam = conn.gamma.at({mm, i, j});
                if (gam.is_zero()) continue;
                probe[static_cast<std::size_t>(slot)] = mm;
                s -= gam * t.at(probe);
            }
            probe[static_cast<std::size_t>(slot)] = j;
        }
        out.at(idx) = std::move(s);
    });
    return out;
}

}  // namespace acbm
