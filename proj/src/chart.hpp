#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace logsymp {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline bool mask_contains(Mask m, int i) { return (m >> i) & 1u; }

/// Sign of moving the sorted block A past the sorted block B into one sorted
/// block: (-1)^{#(a,b) in A x B with a > b}. Masks must be disjoint.
int wedge_sign(Mask a, Mask b);

/// Sign of the shuffle reordering sorted T as (S, T \ S); S must be a subset of T.
int subset_sign(Mask s, Mask t);

std::vector<int> mask_indices(Mask m);
Mask mask_of(const std::vector<int>& idx);

/// Local coordinate chart with a designated normal-crossing divisor.
/// Variables are stored canonically: divisorial first, alphabetical within
/// each group. Basis covector i is dlog(x_i) for i < m and dx_i otherwise;
/// basis vector i is x_i*d/dx_i for i < m and d/dx_i otherwise.
class Chart {
public:
    static std::shared_ptr<const Chart> make(std::vector<std::string> vars,
                                             std::vector<std::string> divisor_vars,
                                             std::optional<int> half_dim = std::nullopt);

    int dim() const { return static_cast<int>(vars_.size()); }
    int divisor_count() const { return m_; }
    bool is_divisorial(int i) const { return i < m_; }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    int var_index(const std::string& name) const; // -1 when absent
    std::optional<int> half_dim() const { return half_dim_; }

    /// Product of the divisorial variables (the reduced normal-crossing equation).
    Poly divisor_equation() const;

    bool same_as(const Chart& o) const {
        return vars_ == o.vars_ && m_ == o.m_;
    }

private:
    Chart(std::vector<std::string> vars, int m, std::optional<int> half_dim)
        : vars_(std::move(vars)), m_(m), half_dim_(half_dim) {}

    std::vector<std::string> vars_;
    int m_;
    std::optional<int> half_dim_;
};

using ChartPtr = std::shared_ptr<const Chart>;

void require_same_chart(const ChartPtr& a, const ChartPtr& b);

} // namespace logsymp
