#include "acbm/classification.hpp"

#include "acbm/errors.hpp"

namespace acbm {

std::string to_string(SubLabel label) {
    switch (label) {
        case SubLabel::F4: return "F4";
        case SubLabel::F5: return "F5";
        case SubLabel::F6: return "F6";
        case SubLabel::Mixed: return "mixed";
        case SubLabel::NotApplicable: return "not-applicable";
    }
    return "not-applicable";
}

Report ClassReport::to_report() const {
    Report report;
    auto member = [](bool b) { return b ? "member" : "not a member"; };
    auto& e = report.add("class memberships", true);
    e.components.emplace_back("F0 (F = 0)", member(f0));
    e.components.emplace_back("U (F4+...+F9)", member(u));
    e.components.emplace_back("U1 (F4+F5+F6+F9)", member(u1));
    e.components.emplace_back("U2 (F4+F5+F6+F7)", member(u2));
    e.components.emplace_back("U3 (F4+F5+F6)", member(u3));
    e.components.emplace_back("sub-label", to_string(sub_label));
    if (!note.empty()) e.components.emplace_back("note", note);
    if (!failed_identities.empty()) {
        // Memberships are verdicts, not failures; this entry carries one
        // witness per failed defining identity for diagnosis.
        auto& w = report.add("identity witnesses", true);
        for (const auto& f : failed_identities)
            w.components.emplace_back(f.identity, witness_string(f.witness, f.residual));
    }
    return report;
}

namespace {

struct Scanner {
    std::vector<FailedIdentity>* sink;

    /// Returns true when every component of `residual` vanishes; otherwise
    /// records the first witness under `name` and returns false.
    bool all_zero(const Tensor& residual, const std::string& name) const {
        bool ok = true;
        for_each_index(residual.dim(), residual.rank(), [&](std::span<const int> idx) {
            if (!ok) return;
            const Poly& p = residual.at(idx);
            if (!p.is_zero()) {
                ok = false;
                sink->push_back(FailedIdentity{name, std::vector<int>(idx.begin(), idx.end()),
                                               p.to_string()});
            }
        });
        return ok;
    }
};

}  // namespace

ClassReport classify(const AlgebraModel& m) {
    const int d = m.dim();
    const Connection lc = levi_civita(m);
    const Tensor F = fundamental_tensor(m, lc);
    const Tensor phi = m.phi_tensor();
    const Tensor eta = m.eta_tensor();
    const LeeForms lee = lee_forms(m, F);

    ClassReport out;
    Scanner scan{&out.failed_identities};

    out.f0 = F.is_zero();

    // U: F(x,y,z) = eta(y) F(x,z,xi) + eta(z) F(x,y,xi) and F(xi,y,z) = 0.
    const Tensor f_xi = plug(F, 2, m.xi());  // F(x,y,xi), rank 2
    Tensor u_residual(d, F.slots(), m.params());
    for_each_index(d, 3, [&](std::span<const int> idx) {
        const int x = idx[0], y = idx[1], z = idx[2];
        Poly s = F.at(idx);
        s -= f_xi.at({x, z}) * m.eta()[static_cast<std::size_t>(y)];
        s -= f_xi.at({x, y}) * m.eta()[static_cast<std::size_t>(z)];
        u_residual.at(idx) = std::move(s);
    });
    const bool u_decomp = scan.all_zero(u_residual, "F(x,y,z) = eta(y)F(x,z,xi) + eta(z)F(x,y,xi)");
    const bool u_xi = scan.all_zero(plug(F, 0, m.xi()), "F(xi,y,z) = 0");
    out.u = u_decomp && u_xi;

    // U1 adds d eta = 0.
    const bool deta_zero = scan.all_zero(d_eta(m, lc), "d eta = 0");
    out.u1 = out.u && deta_zero;

    // U2 adds F(x,y,xi) = -F(phi x, phi y, xi).
    Tensor fxi_phiphi = apply_phi_slot(apply_phi_slot(f_xi, 0, phi), 1, phi);
    const bool u2_cond = scan.all_zero(f_xi + fxi_phiphi, "F(x,y,xi) = -F(phi x,phi y,xi)");
    out.u2 = out.u && u2_cond;

    // U3 adds the symmetry F(x,y,xi) = F(y,x,xi).
    Tensor sym_res(d, {Slot::Covariant, Slot::Covariant}, m.params());
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) sym_res.at({x, y}) = f_xi.at({x, y}) - f_xi.at({y, x});
    const bool u3_sym = scan.all_zero(sym_res, "F(x,y,xi) = F(y,x,xi)");
    out.u3 = out.u2 && u3_sym;

    const bool theta_zero = lee.theta.is_zero();
    const bool theta_star_zero = lee.theta_star.is_zero();
    if (out.u3) {
        if (theta_zero && theta_star_zero)
            out.sub_label = SubLabel::F6;
        else if (theta_star_zero)
            out.sub_label = SubLabel::F4;
        else if (theta_zero)
            out.sub_label = SubLabel::F5;
        else
            out.sub_label = SubLabel::Mixed;
    } else {
        out.sub_label = SubLabel::NotApplicable;
        if (out.u1) {
            // The theta/theta* split separates F4/F5/F6 only inside U3; in
            // U1 the F9 summand is invisible to it, so no label is assigned.
            out.note = "model is in U1 but not U3; theta";
            out.note += theta_zero ? " = 0" : " != 0";
            out.note += ", theta*";
            out.note += theta_star_zero ? " = 0" : " != 0";
            out.note += "; the U1-reading of the theta-split would suggest ";
            if (theta_zero && theta_star_zero)
                out.note += "F6";
            else if (theta_star_zero)
                out.note += "F4";
            else if (theta_zero)
                out.note += "F5";
            else
                out.note += "no class";
            out.note += ", but cannot exclude the F9 component";
        }
    }
    return out;
}

}  // namespace acbm
