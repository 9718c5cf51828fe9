#pragma once

#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "acbm/polynomial.hpp"

namespace acbm {

enum class Slot { Covariant, Contravariant };

/// Dense frame-component tensor of Poly entries. Rank 0 is a scalar.
/// Components are stored row-major; all indices run over 0..dim-1.
class Tensor {
  public:
    Tensor(int dim, std::vector<Slot> slots, ParamSetPtr params);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(slots_.size()); }
    Slot slot(int i) const { return slots_.at(static_cast<std::size_t>(i)); }
    const std::vector<Slot>& slots() const { return slots_; }
    const ParamSetPtr& params() const { return params_; }
    const std::vector<Poly>& components() const { return comps_; }

    Poly& at(std::span<const int> idx);
    const Poly& at(std::span<const int> idx) const;
    Poly& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }
    const Poly& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx.begin(), idx.size()));
    }

    bool is_zero() const;
    bool same_shape(const Tensor& other) const;

    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    Tensor& operator*=(const Rational& rhs);
    Tensor operator-() const;
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const Rational& b) { return a *= b; }

    /// Exact component-wise equality of canonical forms. Shape mismatch throws.
    friend bool operator==(const Tensor& a, const Tensor& b);

  private:
    std::size_t flat_index(std::span<const int> idx) const;

    int dim_;
    std::vector<Slot> slots_;
    ParamSetPtr params_;
    std::vector<Poly> comps_;
};

/// Contracts slot_a with slot_b. One covariant and one contravariant slot
/// trace naturally (metric ignored); two covariant slots contract through
/// `metric_inverse` (a rank-2 contravariant tensor). Two contravariant slots
/// are rejected.
Tensor contract(const Tensor& t, int slot_a, int slot_b, const Tensor& metric_inverse);

/// Applies a (1,1) structure tensor to one covariant slot:
/// result(..., i, ...) = sum_m phi^m_i * t(..., m, ...).
Tensor apply_phi_slot(const Tensor& t, int slot, const Tensor& phi);

/// Cyclic sum over the first three slots (which must exist and share kind).
Tensor cyclic_sum(const Tensor& t);

bool tensor_equal(const Tensor& a, const Tensor& b);

/// Plugs a rational vector into a covariant slot (or a covector into a
/// contravariant slot), dropping that slot.
Tensor plug(const Tensor& t, int slot, std::span<const Rational> vec);

/// Runs fn over every index tuple of the given rank, in lexicographic order.
void for_each_index(int dim, int rank, const std::function<void(std::span<const int>)>& fn);

}  // namespace acbm
