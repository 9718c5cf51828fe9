#include "acbm/tensor.hpp"

#include <algorithm>

#include "acbm/errors.hpp"

namespace acbm {

namespace {

std::size_t power(int dim, int rank) {
    std::size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
    return n;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Slot> slots, ParamSetPtr params)
    : dim_(dim), slots_(std::move(slots)), params_(std::move(params)) {
    if (dim_ <= 0) throw StructuralError("tensor dimension must be positive");
    comps_.assign(power(dim_, rank()), Poly::zero(params_));
}

std::size_t Tensor::flat_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw StructuralError("index arity mismatch");
    std::size_t flat = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_) throw StructuralError("tensor index out of range");
        flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    }
    return flat;
}

Poly& Tensor::at(std::span<const int> idx) { return comps_[flat_index(idx)]; }
const Poly& Tensor::at(std::span<const int> idx) const { return comps_[flat_index(idx)]; }

bool Tensor::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Tensor::same_shape(const Tensor& other) const {
    return dim_ == other.dim_ && slots_ == other.slots_;
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    if (!same_shape(rhs)) throw StructuralError("tensor shape mismatch in addition");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += rhs.comps_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    if (!same_shape(rhs)) throw StructuralError("tensor shape mismatch in subtraction");
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= rhs.comps_[i];
    return *this;
}

Tensor& Tensor::operator*=(const Rational& rhs) {
    for (auto& c : comps_) c *= rhs;
    return *this;
}

Tensor Tensor::operator-() const {
    Tensor out(*this);
    for (auto& c : out.comps_) c = -c;
    return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b)) throw StructuralError("tensor shape mismatch in comparison");
    return a.comps_ == b.comps_;
}

bool tensor_equal(const Tensor& a, const Tensor& b) { return a == b; }

void for_each_index(int dim, int rank, const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    if (rank == 0) {
        fn(idx);
        return;
    }
    for (;;) {
        fn(idx);
        int pos = rank - 1;
        while (pos >= 0) {
            if (++idx[static_cast<std::size_t>(pos)] < dim) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

Tensor contract(const Tensor& t, int slot_a, int slot_b, const Tensor& metric_inverse) {
    const int rank = t.rank();
    if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= rank || slot_b >= rank)
        throw StructuralError("invalid contraction slots");
    if (slot_a > slot_b) std::swap(slot_a, slot_b);

    const Slot ka = t.slot(slot_a);
    const Slot kb = t.slot(slot_b);
    const bool metric_mode = ka == Slot::Covariant && kb == Slot::Covariant;
    if (!metric_mode && ka == kb)
        throw StructuralError("slot kind mismatch: contraction needs mixed slots or two covariant slots");
    if (metric_mode) {
        if (metric_inverse.rank() != 2 || metric_inverse.dim() != t.dim() ||
            metric_inverse.slot(0) != Slot::Contravariant ||
            metric_inverse.slot(1) != Slot::Contravariant)
            throw StructuralError("metric inverse must be a rank-2 contravariant tensor");
    }

    std::vector<Slot> out_slots;
    for (int s = 0; s < rank; ++s)
        if (s != slot_a && s != slot_b) out_slots.push_back(t.slot(s));
    Tensor out(t.dim(), out_slots, t.params());

    for_each_index(t.dim(), rank - 2, [&](std::span<const int> out_idx) {
        Poly sum = Poly::zero(t.params());
        std::vector<int> full(static_cast<std::size_t>(rank));
        for (int i = 0; i < t.dim(); ++i) {
            for (int j = 0; j < t.dim(); ++j) {
                if (!metric_mode && i != j) continue;
                std::size_t src = 0;
                for (int s = 0; s < rank; ++s) {
                    if (s == slot_a)
                        full[static_cast<std::size_t>(s)] = i;
                    else if (s == slot_b)
                        full[static_cast<std::size_t>(s)] = j;
                    else
                        full[static_cast<std::size_t>(s)] = out_idx[src++];
                }
                if (metric_mode) {
                    const Poly& w = metric_inverse.at({i, j});
                    if (w.is_zero()) continue;
                    sum += t.at(full) * w;
                } else {
                    sum += t.at(full);
                }
            }
        }
        out.at(out_idx) = std::move(sum);
    });
    return out;
}

Tensor apply_phi_slot(const Tensor& t, int slot, const Tensor& phi) {
    if (slot < 0 || slot >= t.rank()) throw StructuralError("slot out of range");
    if (t.slot(slot) != Slot::Covariant)
        throw StructuralError("phi can only be applied to a covariant slot");
    if (phi.rank() != 2 || phi.dim() != t.dim() || phi.slot(0) != Slot::Contravariant ||
        phi.slot(1) != Slot::Covariant)
        throw StructuralError("structure operator must be a (1,1) tensor");

    Tensor out(t.dim(), t.slots(), t.params());
    for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
        Poly sum = Poly::zero(t.params());
        std::vector<int> src(idx.begin(), idx.end());
        const int target = idx[static_cast<std::size_t>(slot)];
        for (int m = 0; m < t.dim(); ++m) {
            const Poly& w = phi.at({m, target});
            if (w.is_zero()) continue;
            src[static_cast<std::size_t>(slot)] = m;
            sum += t.at(src) * w;
        }
        out.at(idx) = std::move(sum);
    });
    return out;
}

Tensor cyclic_sum(const Tensor& t) {
    if (t.rank() < 3) throw StructuralError("cyclic sum needs rank >= 3");
    if (t.slot(0) != t.slot(1) || t.slot(1) != t.slot(2))
        throw StructuralError("cyclic sum needs three slots of the same kind");
    Tensor out(t.dim(), t.slots(), t.params());
    for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
        std::vector<int> p(idx.begin(), idx.end());
        Poly sum = t.at(idx);
        p[0] = idx[1]; p[1] = idx[2]; p[2] = idx[0];
        sum += t.at(p);
        p[0] = idx[2]; p[1] = idx[0]; p[2] = idx[1];
        sum += t.at(p);
        out.at(idx) = std::move(sum);
    });
    return out;
}

Tensor plug(const Tensor& t, int slot, std::span<const Rational> vec) {
    if (slot < 0 || slot >= t.rank()) throw StructuralError("slot out of range");
    if (static_cast<int>(vec.size()) != t.dim()) throw StructuralError("vector length mismatch");
    std::vector<Slot> out_slots;
    for (int s = 0; s < t.rank(); ++s)
        if (s != slot) out_slots.push_back(t.slot(s));
    Tensor out(t.dim(), out_slots, t.params());
    for_each_index(t.dim(), t.rank() - 1, [&](std::span<const int> out_idx) {
        Poly sum = Poly::zero(t.params());
        std::vector<int> full(static_cast<std::size_t>(t.rank()));
        for (int m = 0; m < t.dim(); ++m) {
            if (vec[static_cast<std::size_t>(m)] == 0) continue;
            std::size_t src = 0;
            for (int s = 0; s < t.rank(); ++s) {
                if (s == slot)
                    full[static_cast<std::size_t>(s)] = m;
                else
                    full[static_cast<std::size_t>(s)] = out_idx[src++];
            }
            sum += t.at(full) * vec[static_cast<std::size_t>(m)];
        }
        out.at(out_idx) = std::move(sum);
    });
    return out;
}

}  // namespace acbm
