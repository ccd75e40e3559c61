#pragma once

#include <string>
#include <vector>

#include "poly.hpp"

namespace logsymp {

/// Fraction of polynomials, kept normalized: gcd(num, den) = 1 and den monic
/// in graded-lex order. The coefficient field for all log forms.
class RatFunc {
public:
    RatFunc() : num_(0), den_(Poly::constant(0, 1)) {}
    explicit RatFunc(const Poly& p) : num_(p), den_(Poly::constant(p.nvars(), 1)) {}
    RatFunc(const Poly& num, const Poly& den);

    static RatFunc zero(int nvars) { return RatFunc(Poly::zero(nvars)); }
    static RatFunc constant(int nvars, const Q& c) { return RatFunc(Poly::constant(nvars, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// The numerator, valid only when is_polynomial().
    Poly as_polynomial() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const;

    /// Quotient-rule derivative with immediate renormalization.
    RatFunc derivative(int idx) const;

    RatFunc shifted(int idx, const Q& c) const;

    /// Substitute x_idx -> 0; fails when the denominator vanishes there.
    RatFunc at_zero(int idx) const;

    bool den_vanishes_at_origin() const { return den_.eval_origin() == 0; }
    Q eval_origin() const;

    RatFunc permuted(const std::vector<int>& perm) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();

    Poly num_, den_;
};

} // namespace logsymp
