#include "acbm/model.hpp"

#include <utility>

#include "acbm/errors.hpp"

namespace acbm {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw StructuralError(what);
}

void check_matrix_shape(const RationalMatrix& m, int dim, const char* what) {
    require(static_cast<int>(m.size()) == dim, what);
    for (const auto& row : m) require(static_cast<int>(row.size()) == dim, what);
}

/// Characteristic polynomial coefficients of a rational matrix by
/// Faddeev-LeVerrier: p(x) = x^d - c1 x^(d-1) - ... - cd, returned as the
/// coefficient list of x^d..x^0.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
    const int d = static_cast<int>(m.size());
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    coeffs[0] = 1;
    RationalMatrix acc(static_cast<std::size_t>(d), RationalVector(static_cast<std::size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int k = 1; k <= d; ++k) {
        RationalMatrix next(static_cast<std::size_t>(d), RationalVector(static_cast<std::size_t>(d), Rational(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational s(0);
                for (int l = 0; l < d; ++l)
                    s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                         acc[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
                next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            }
        acc = next;
        Rational tr(0);
        for (int i = 0; i < d; ++i) tr += acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        Rational ck = tr / k;
        coeffs[static_cast<std::size_t>(k)] = -ck;
        for (int i = 0; i < d; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= ck;
    }
    return coeffs;  // p(x) = sum_j coeffs[j] x^(d-j)
}

int descartes_sign_changes(const std::vector<Rational>& coeffs) {
    int changes = 0;
    int last = 0;
    for (const auto& c : coeffs) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

RationalMatrix invert(const RationalMatrix& m) {
    const int d = static_cast<int>(m.size());
    RationalMatrix a = m;
    RationalMatrix inv(static_cast<std::size_t>(d), RationalVector(static_cast<std::size_t>(d), Rational(0)));
    for (int i = 0; i < d; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row) {
            if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw StructuralError("metric is not invertible");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
        const Rational lead = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < d; ++j) {
            a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
        }
        for (int row = 0; row < d; ++row) {
            if (row == col) continue;
            const Rational factor = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j < d; ++j) {
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    factor * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    return inv;
}

AlgebraModel::AlgebraModel(int n, ParamSetPtr params, Tensor c, RationalMatrix g,
                           RationalMatrix phi, RationalVector xi, RationalVector eta)
    : n_(n),
      params_(std::move(params)),
      c_(std::move(c)),
      g_(std::move(g)),
      phi_(std::move(phi)),
      xi_(std::move(xi)),
      eta_(std::move(eta)) {
    require(n_ >= 1, "dimension must be 2n+1 with n >= 1");
    const int d = dim();
    require(c_.dim() == d && c_.rank() == 3, "structure constants must be a rank-3 tensor");
    require(c_.slot(0) == Slot::Contravariant && c_.slot(1) == Slot::Covariant &&
                c_.slot(2) == Slot::Covariant,
            "structure constants must be a (1,2) tensor");
    check_matrix_shape(g_, d, "metric has wrong shape");
    check_matrix_shape(phi_, d, "phi has wrong shape");
    require(static_cast<int>(xi_.size()) == d, "xi has wrong length");
    require(static_cast<int>(eta_.size()) == d, "eta has wrong length");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j)
            require(g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                        g_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)],
                    "metric must be symmetric");
    g_inv_ = invert(g_);
}

Tensor AlgebraModel::metric_tensor() const {
    Tensor t(dim(), {Slot::Covariant, Slot::Covariant}, params_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            t.at({i, j}) = Poly::constant(params_, g_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return t;
}

Tensor AlgebraModel::metric_inverse_tensor() const {
    Tensor t(dim(), {Slot::Contravariant, Slot::Contravariant}, params_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            t.at({i, j}) = Poly::constant(params_, g_inv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return t;
}

Tensor AlgebraModel::phi_tensor() const {
    Tensor t(dim(), {Slot::Contravariant, Slot::Covariant}, params_);
    for (int k = 0; k < dim(); ++k)
        for (int j = 0; j < dim(); ++j)
            t.at({k, j}) = Poly::constant(params_, phi_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return t;
}

Tensor AlgebraModel::eta_tensor() const {
    Tensor t(dim(), {Slot::Covariant}, params_);
    for (int j = 0; j < dim(); ++j) t.at({j}) = Poly::constant(params_, eta_[static_cast<std::size_t>(j)]);
    return t;
}

Report validate_structure(const AlgebraModel& m) {
    Report report;
    const int d = m.dim();
    const auto& g = m.metric();
    const auto& phi = m.phi();
    const auto& xi = m.xi();
    const auto& eta = m.eta();

    {
        auto& e = report.add("axiom phi(xi) = 0", true);
        for (int k = 0; k < d && e.pass; ++k) {
            Rational s(0);
            for (int j = 0; j < d; ++j) s += phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j)];
            if (s != 0) {
                e.pass = false;
                e.witness = witness_string({k}, to_string(s));
            }
        }
    }
    {
        auto& e = report.add("axiom phi^2 = -id + xi (x) eta", true);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j) {
                Rational s(0);
                for (int p = 0; p < d; ++p) s += phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] * phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
                s += (k == j ? Rational(1) : Rational(0)) - xi[static_cast<std::size_t>(k)] * eta[static_cast<std::size_t>(j)];
                if (s != 0 && e.pass) {
                    e.pass = false;
                    e.witness = witness_string({k, j}, to_string(s));
                }
            }
    }
    {
        auto& e = report.add("axiom eta o phi = 0", true);
        for (int j = 0; j < d; ++j) {
            Rational s(0);
            for (int k = 0; k < d; ++k) s += eta[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (s != 0 && e.pass) {
                e.pass = false;
                e.witness = witness_string({j}, to_string(s));
            }
        }
    }
    {
        Rational s(0);
        for (int k = 0; k < d; ++k) s += eta[static_cast<std::size_t>(k)] * xi[static_cast<std::size_t>(k)];
        auto& e = report.add("axiom eta(xi) = 1", s == 1);
        if (s != 1) e.witness = "value = " + to_string(s);
    }
    {
        auto& e = report.add("axiom g(phi.,phi.) = -g + eta (x) eta", true);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Rational s(0);
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q)
                        s += phi[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] *
                             phi[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] *
                             g[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                s += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                     eta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(j)];
                if (s != 0 && e.pass) {
                    e.pass = false;
                    e.witness = witness_string({i, j}, to_string(s));
                }
            }
    }
    {
        auto& e = report.add("duality eta = g(., xi)", true);
        for (int j = 0; j < d; ++j) {
            Rational s(0);
            for (int k = 0; k < d; ++k) s += g[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * xi[static_cast<std::size_t>(k)];
            s -= eta[static_cast<std::size_t>(j)];
            if (s != 0 && e.pass) {
                e.pass = false;
                e.witness = witness_string({j}, to_string(s));
            }
        }
    }
    {
        auto& e = report.add("bracket antisymmetry", true);
        for (int k = 0; k < d && e.pass; ++k)
            for (int i = 0; i < d && e.pass; ++i)
                for (int j = 0; j < d; ++j) {
                    Poly s = m.c(k, i, j) + m.c(k, j, i);
                    if (!s.is_zero()) {
                        e.pass = false;
                        e.witness = witness_string({k, i, j}, s.to_string());
                        break;
                    }
                }
    }
    {
        // Signature (n, n+1): n+1 positive and n negative eigenvalues. g is
        // symmetric so all roots of the characteristic polynomial are real
        // and Descartes' rule counts them exactly.
        auto coeffs = characteristic_polynomial(m.metric());
        const int positive = descartes_sign_changes(coeffs);
        std::vector<Rational> reflected = coeffs;
        for (std::size_t j = 1; j < reflected.size(); j += 2) reflected[j] = -reflected[j];
        const int negative = descartes_sign_changes(reflected);
        const bool ok = positive == m.n() + 1 && negative == m.n();
        auto& e = report.add("metric signature (n, n+1)", ok,
                             std::to_string(positive) + " positive / " + std::to_string(negative) +
                                 " negative eigenvalues");
        (void)e;
    }
    return report;
}

Report check_jacobi(const AlgebraModel& m) {
    Report report;
    const int d = m.dim();
    auto& e = report.add("jacobi identity", true);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    Poly s = Poly::zero(m.params());
                    for (int mm = 0; mm < d; ++mm) {
                        s += m.c(mm, i, j) * m.c(l, mm, k);
                        s += m.c(mm, j, k) * m.c(l, mm, i);
                        s += m.c(mm, k, i) * m.c(l, mm, j);
                    }
                    if (!s.is_zero() && e.pass) {
                        e.pass = false;
                        e.witness = witness_string({i, j, k, l}, s.to_string());
                    }
                }
    return report;
}

AlgebraModel bind_parameters(const AlgebraModel& m, const std::map<std::string, Rational>& bindings) {
    for (const auto& [name, value] : bindings) {
        (void)value;
        if (!m.params()->index_of(name))
            throw StructuralError("binding for unknown parameter '" + name + "'");
    }
    std::vector<std::string> remaining;
    for (const auto& name : m.params()->names())
        if (!bindings.count(name)) remaining.push_back(name);
    auto params = make_param_set(remaining);

    Tensor c(m.dim(), {Slot::Contravariant, Slot::Covariant, Slot::Covariant}, params);
    for_each_index(m.dim(), 3, [&](std::span<const int> idx) {
        c.at(idx) = m.structure_constants().at(idx).bind(bindings);
    });
    return AlgebraModel(m.n(), params, std::move(c), m.metric(), m.phi(), m.xi(), m.eta());
}

}  // namespace acbm
