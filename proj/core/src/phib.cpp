#include "acbm/phib.hpp"

#include "acbm/errors.hpp"
#include "acbm/geometry.hpp"

namespace acbm {

Connection phib_connection(const AlgebraModel& m, const Connection& lc) {
    const int d = m.dim();
    const auto& phi = m.phi();
    const Tensor nx = nabla_xi(m, lc);
    Tensor gamma(d, {Slot::Contravariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // (nabla_i eta)(e_j) = -sum_m Gamma^m_{ij} eta_m
            Poly nabla_eta = Poly::zero(m.params());
            for (int mm = 0; mm < d; ++mm) {
                if (m.eta()[static_cast<std::size_t>(mm)] == 0) continue;
                nabla_eta -= lc.gamma.at({mm, i, j}) * m.eta()[static_cast<std::size_t>(mm)];
            }
            for (int k = 0; k < d; ++k) {
                // (nabla_i phi)(phi e_j) component k
                Poly corr = Poly::zero(m.params());
                for (int p = 0; p < d; ++p) {
                    const Rational fpj = phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                    if (fpj == 0) continue;
                    Poly dphi = Poly::zero(m.params());
                    for (int q = 0; q < d; ++q) {
                        const Rational fqp = phi[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
                        if (fqp != 0) dphi += lc.gamma.at({k, i, q}) * fqp;
                        const Rational fkq = phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                        if (fkq != 0) dphi -= lc.gamma.at({q, i, p}) * fkq;
                    }
                    corr += dphi * fpj;
                }
                corr += nabla_eta * m.xi()[static_cast<std::size_t>(k)];
                corr *= Rational(1, 2);
                if (m.eta()[static_cast<std::size_t>(j)] != 0)
                    corr -= nx.at({k, i}) * m.eta()[static_cast<std::size_t>(j)];
                gamma.at({k, i, j}) = lc.gamma.at({k, i, j}) + corr;
            }
        }
    return Connection{std::move(gamma)};
}

Connection phib_connection_u_form(const AlgebraModel& m, const Connection& lc) {
    const ClassReport cls = classify(m);
    if (!cls.u)
        throw PreconditionError("phiB U-form requires a model of class U",
                                to_text(cls.to_report()));
    const int d = m.dim();
    const Tensor nx = nabla_xi(m, lc);
    Tensor gamma(d, {Slot::Contravariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Poly nabla_eta = Poly::zero(m.params());
            for (int mm = 0; mm < d; ++mm) {
                if (m.eta()[static_cast<std::size_t>(mm)] == 0) continue;
                nabla_eta -= lc.gamma.at({mm, i, j}) * m.eta()[static_cast<std::size_t>(mm)];
            }
            for (int k = 0; k < d; ++k) {
                Poly value = lc.gamma.at({k, i, j});
                value += nabla_eta * m.xi()[static_cast<std::size_t>(k)];
                if (m.eta()[static_cast<std::size_t>(j)] != 0)
                    value -= nx.at({k, i}) * m.eta()[static_cast<std::size_t>(j)];
                gamma.at({k, i, j}) = std::move(value);
            }
        }
    return Connection{std::move(gamma)};
}

Tensor potential_tensor(const AlgebraModel& m, const Connection& lc, const Connection& np) {
    const int d = m.dim();
    const auto& g = m.metric();
    Tensor Q(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int z = 0; z < d; ++z) {
                Poly s = Poly::zero(m.params());
                for (int k = 0; k < d; ++k) {
                    const Rational gkz = g[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)];
                    if (gkz == 0) continue;
                    s += (np.gamma.at({k, i, j}) - lc.gamma.at({k, i, j})) * gkz;
                }
                Q.at({i, j, z}) = std::move(s);
            }
    return Q;
}

Tensor torsion_tensor(const AlgebraModel& m, const Connection& conn) {
    const int d = m.dim();
    const auto& g = m.metric();
    Tensor T(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int z = 0; z < d; ++z) {
                Poly s = Poly::zero(m.params());
                for (int k = 0; k < d; ++k) {
                    const Rational gkz = g[static_cast<std::size_t>(k)][static_cast<std::size_t>(z)];
                    if (gkz == 0) continue;
                    s += (conn.gamma.at({k, i, j}) - conn.gamma.at({k, j, i}) - m.c(k, i, j)) * gkz;
                }
                T.at({i, j, z}) = std::move(s);
            }
    return T;
}

Tensor torsion_from_fundamental(const AlgebraModel& m, const Connection& lc) {
    const int d = m.dim();
    const Tensor F = fundamental_tensor(m, lc);
    const Tensor phi = m.phi_tensor();
    const Tensor f_phi1 = apply_phi_slot(F, 1, phi);                              // F(x, phi y, z)
    const Tensor f_phi1_phi2sq = apply_phi_slot(apply_phi_slot(f_phi1, 2, phi), 2, phi);
    const Tensor f_phi1_xi = plug(f_phi1, 2, m.xi());                             // F(x, phi y, xi)
    Tensor T(d, {Slot::Covariant, Slot::Covariant, Slot::Covariant}, m.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = (f_phi1_phi2sq.at({x, y, z}) - f_phi1_phi2sq.at({y, x, z})) * Rational(-1, 2);
        s += f_phi1_xi.at({y, z}) * m.eta()[static_cast<std::size_t>(x)];
        s -= f_phi1_xi.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        s += (f_phi1_xi.at({x, y}) - f_phi1_xi.at({y, x})) * m.eta()[static_cast<std::size_t>(z)];
        T.at(idx) = std::move(s);
    });
    return T;
}

TorsionAnalysis torsion_analysis(const AlgebraModel& m, const Connection& np) {
    const Connection lc = levi_civita(m);
    Tensor T = torsion_tensor(m, np);
    const Tensor T_closed = torsion_from_fundamental(m, lc);
    if (!(T == T_closed)) {
        auto diff = check_zero("torsion dual construction", T - T_closed);
        throw InternalError("torsion cross-check failed at " + diff.witness_text());
    }

    const Tensor ginv = m.metric_inverse_tensor();
    Tensor t = contract(T, 1, 2, ginv);
    Tensor t_star = contract(apply_phi_slot(T, 2, m.phi_tensor()), 1, 2, ginv);
    Tensor t_hat = plug(plug(T, 1, m.xi()), 1, m.xi());

    TorsionAnalysis out{std::move(T), std::move(t), std::move(t_star), std::move(t_hat), {}};
    out.class_verdicts = torsion_class_checks(m, out.torsion);
    return out;
}

namespace {

IdentityCheck conjoin(std::string name, std::initializer_list<IdentityCheck> parts) {
    IdentityCheck out{std::move(name), true, std::nullopt, {}};
    for (const auto& part : parts) {
        if (!part.pass) {
            out.pass = false;
            out.witness = part.witness;
            out.residual = part.residual + " [" + part.name + "]";
            break;
        }
    }
    return out;
}

/// T(x,y,z) = eta(z) T(phi^2 x, phi^2 y, xi)
IdentityCheck torsion_vertical_eta_output(const AlgebraModel& m, const Tensor& T) {
    const int d = m.dim();
    const Tensor phi = m.phi_tensor();
    const Tensor t_out_xi = plug(T, 2, m.xi());
    const Tensor tpp = apply_phi_slot(apply_phi_slot(t_out_xi, 0, phi), 0, phi);
    // tpp(x,y) now carries phi^2 in the first slot only; apply to second too.
    const Tensor tpp2 = apply_phi_slot(apply_phi_slot(tpp, 1, phi), 1, phi);
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        residual.at(idx) =
            T.at(idx) - tpp2.at({idx[0], idx[1]}) * m.eta()[static_cast<std::size_t>(idx[2])];
    });
    return check_zero("T(x,y,z) = eta(z)T(phi^2 x,phi^2 y,xi)", residual);
}

/// T(x,y,z) = eta(x)T(xi,phi^2 y,phi^2 z) - eta(y)T(xi,phi^2 x,phi^2 z)
IdentityCheck torsion_vertical_eta_input(const AlgebraModel& m, const Tensor& T) {
    const int d = m.dim();
    const Tensor phi = m.phi_tensor();
    const Tensor txi = plug(T, 0, m.xi());
    const Tensor txipp =
        apply_phi_slot(apply_phi_slot(apply_phi_slot(apply_phi_slot(txi, 0, phi), 0, phi), 1, phi), 1, phi);
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = T.at(idx);
        s -= txipp.at({y, z}) * m.eta()[static_cast<std::size_t>(x)];
        s += txipp.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        residual.at(idx) = std::move(s);
    });
    return check_zero("T(x,y,z) = eta(x)T(xi,phi^2 y,phi^2 z) - eta(y)T(xi,phi^2 x,phi^2 z)",
                      residual);
}

IdentityCheck torsion_xi_input_zero(const AlgebraModel& m, const Tensor& T) {
    return check_zero("T(xi,y,z) = 0", plug(T, 0, m.xi()));
}

IdentityCheck torsion_xi_antisymmetric(const AlgebraModel& m, const Tensor& T) {
    const int d = m.dim();
    const Tensor txi = plug(T, 0, m.xi());
    Tensor residual(d, {Slot::Covariant, Slot::Covariant}, T.params());
    for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) residual.at({y, z}) = txi.at({y, z}) + txi.at({z, y});
    return check_zero("T(xi,y,z) = -T(xi,z,y)", residual);
}

IdentityCheck torsion_xi_phi_invariant(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    const Tensor txi = plug(T, 0, m.xi());
    Tensor residual = apply_phi_slot(apply_phi_slot(txi, 0, phi), 1, phi) - txi;
    return check_zero("T(xi,phi y,phi z) = T(xi,y,z)", residual);
}

/// T(x,y,xi) = -T(phi x, phi y, xi) over the lowered output slot.
IdentityCheck torsion_output_phi_anti(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    const Tensor t_out = plug(T, 2, m.xi());
    Tensor residual = apply_phi_slot(apply_phi_slot(t_out, 0, phi), 1, phi) + t_out;
    return check_zero("T(x,y,xi) = -T(phi x,phi y,xi)", residual);
}

IdentityCheck torsion_output_phi_invariant(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    const Tensor t_out = plug(T, 2, m.xi());
    Tensor residual = apply_phi_slot(apply_phi_slot(t_out, 0, phi), 1, phi) - t_out;
    return check_zero("T(x,y,xi) = T(phi x,phi y,xi)", residual);
}

/// T(x,y,z) = -T(phi x, phi y, z)
IdentityCheck torsion_input_phi_anti(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    Tensor residual = apply_phi_slot(apply_phi_slot(T, 0, phi), 1, phi) + T;
    return check_zero("T(x,y,z) = -T(phi x,phi y,z)", residual);
}

IdentityCheck torsion_input_phi_invariant(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    Tensor residual = apply_phi_slot(apply_phi_slot(T, 0, phi), 1, phi) - T;
    return check_zero("T(x,y,z) = T(phi x,phi y,z)", residual);
}

/// T(x,y,z) = T(phi x, y, phi z)
IdentityCheck torsion_outer_phi_pair(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    Tensor residual = apply_phi_slot(apply_phi_slot(T, 0, phi), 2, phi) - T;
    return check_zero("T(x,y,z) = T(phi x,y,phi z)", residual);
}

IdentityCheck torsion_phi_cyclic(const AlgebraModel& m, const Tensor& T) {
    const Tensor phi = m.phi_tensor();
    return check_zero("cyclic sum of T(phi x,y,z) = 0", cyclic_sum(apply_phi_slot(T, 0, phi)));
}

IdentityCheck torsion_pure_vertical(const AlgebraModel& m, const Tensor& T) {
    const int d = m.dim();
    const Tensor that = plug(plug(T, 1, m.xi()), 1, m.xi());  // t-hat(x) = T(x,xi,xi)
    Tensor residual(d, T.slots(), T.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = T.at(idx);
        Poly rhs = that.at({x}) * m.eta()[static_cast<std::size_t>(y)] -
                   that.at({y}) * m.eta()[static_cast<std::size_t>(x)];
        s -= rhs * m.eta()[static_cast<std::size_t>(z)];
        residual.at(idx) = std::move(s);
    });
    return check_zero("T(x,y,z) = eta(z){eta(y)t^(x) - eta(x)t^(y)}", residual);
}

}  // namespace

std::map<std::string, IdentityCheck> torsion_class_checks(const AlgebraModel& m, const Tensor& T) {
    {
        const int d = m.dim();
        Tensor anti(d, T.slots(), T.params());
        for_each_index(d, 3, [&](std::span<const int> idx) {
            anti.at(idx) = T.at(idx) + T.at({idx[1], idx[0], idx[2]});
        });
        auto check = check_zero("antisymmetry", anti);
        if (!check.pass)
            throw StructuralError("torsion class checks need T antisymmetric in the first two slots; failed at " +
                                  check.witness_text());
    }

    std::map<std::string, IdentityCheck> out;
    const auto zero_in = torsion_xi_input_zero(m, T);
    const auto zero_out = torsion_xi_output_zero(m, T);
    const auto vert_in = torsion_vertical_eta_input(m, T);
    const auto vert_out = torsion_vertical_eta_output(m, T);
    const auto xi_sym = torsion_xi_symmetric(m, T);
    const auto xi_anti = torsion_xi_antisymmetric(m, T);
    const auto xi_phi_anti = torsion_xi_phi_anti(m, T);
    const auto xi_phi_inv = torsion_xi_phi_invariant(m, T);
    const auto vertical = torsion_vertical_structure(m, T);

    out.emplace("T12", conjoin("T12", {zero_in, zero_out, torsion_input_phi_anti(m, T),
                                       torsion_outer_phi_pair(m, T)}));
    out.emplace("T13", conjoin("T13", {zero_in, zero_out, torsion_input_phi_invariant(m, T),
                                       torsion_cyclic_zero(m, T)}));
    out.emplace("T14", conjoin("T14", {zero_in, zero_out, torsion_input_phi_invariant(m, T),
                                       torsion_phi_cyclic(m, T)}));
    out.emplace("T21", conjoin("T21", {vert_out, torsion_output_phi_anti(m, T)}));
    out.emplace("T22", conjoin("T22", {vert_out, torsion_output_phi_invariant(m, T)}));
    out.emplace("T31", conjoin("T31", {vert_in, xi_sym, xi_phi_anti}));
    out.emplace("T32", conjoin("T32", {vert_in, xi_anti, xi_phi_anti}));
    out.emplace("T33", conjoin("T33", {vert_in, xi_sym, xi_phi_inv}));
    out.emplace("T34", conjoin("T34", {vert_in, xi_anti, xi_phi_inv}));
    out.emplace("T41", torsion_pure_vertical(m, T));
    out.emplace("U vertical structure", vertical);
    out.emplace("U1 set (T31+T33)", conjoin("U1 set (T31+T33)", {vertical, zero_out, xi_sym}));
    out.emplace("U2 set (T31+T32)", conjoin("U2 set (T31+T32)", {vertical, zero_out, xi_phi_anti}));
    out.emplace("U3 set (T31)", out.at("T31"));
    return out;
}

Report u3_torsion_properties(const AlgebraModel& m, const Tensor& T) {
    const ClassReport cls = classify(m);
    if (!cls.u1 && !cls.u2)
        throw PreconditionError("torsion property suite requires class U1 or U2 membership",
                                to_text(cls.to_report()));
    Report report;
    auto add = [&](const IdentityCheck& c) {
        auto& e = report.add(c.name, c.pass);
        if (!c.pass) e.witness = c.witness_text();
    };
    if (cls.u3) {
        add(torsion_phi_shuffle(m, T));
        add(torsion_phi_pair(m, T));
        add(torsion_phi_args_symmetric(m, T));
        add(torsion_tail_antisymmetry(m, T));
    }
    if (cls.u1) {
        add(torsion_cyclic_zero(m, T));
        const Connection lc = levi_civita(m);
        const Connection np = phib_connection(m, lc);
        add(potential_is_torsion_transpose(m, potential_tensor(m, lc, np), T));
    }
    if (cls.u2) {
        const Connection lc = levi_civita(m);
        add(nabla_xi_phi_commutes(m, nabla_xi(m, lc)));
    }
    return report;
}

}  // namespace acbm
