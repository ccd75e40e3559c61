#include "chart.hpp"

#include <algorithm>
#include <set>

namespace logsymp {

int wedge_sign(Mask a, Mask b) {
    int inv = 0;
    for (int i = 0; i < 32; ++i) {
        if (!mask_contains(a, i)) continue;
        // count b-elements below i
        inv += popcount(b & ((1u << i) - 1u));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

int subset_sign(Mask s, Mask t) {
    Mask rest = t & ~s;
    int inv = 0;
    for (int i = 0; i < 32; ++i) {
        if (!mask_contains(s, i)) continue;
        inv += popcount(rest & ((1u << i) - 1u));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

std::vector<int> mask_indices(Mask m) {
    std::vector<int> r;
    for (int i = 0; i < 32; ++i)
        if (mask_contains(m, i)) r.push_back(i);
    return r;
}

Mask mask_of(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= (1u << i);
    return m;
}

ChartPtr Chart::make(std::vector<std::string> vars, std::vector<std::string> divisor_vars,
                     std::optional<int> half_dim) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) fail(ErrorKind::Internal, "duplicate variable names");
    std::vector<std::string> div, plain;
    std::set<std::string> divset(divisor_vars.begin(), divisor_vars.end());
    for (const auto& d : divset)
        if (!seen.count(d)) fail(ErrorKind::Internal, "divisor variable not in chart: " + d);
    for (const auto& v : vars)
        (divset.count(v) ? div : plain).push_back(v);
    std::sort(div.begin(), div.end());
    std::sort(plain.begin(), plain.end());
    std::vector<std::string> ordered = div;
    ordered.insert(ordered.end(), plain.begin(), plain.end());
    if (vars.size() > 30) fail(ErrorKind::Internal, "chart dimension too large for mask representation");
    if (half_dim && *half_dim * 2 != static_cast<int>(vars.size()))
        fail(ErrorKind::Internal, "half_dim inconsistent with dimension");
    return ChartPtr(new Chart(std::move(ordered), static_cast<int>(div.size()), half_dim));
}

int Chart::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

Poly Chart::divisor_equation() const {
    Poly f = Poly::constant(dim(), 1);
    for (int i = 0; i < m_; ++i) f = f * Poly::variable(dim(), i);
    return f;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
    if (!a || !b || !a->same_as(*b)) fail(ErrorKind::ChartMismatch, "operands live on different charts");
}

} // namespace logsymp
