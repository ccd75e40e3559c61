#include "ratfunc.hpp"

namespace logsymp {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(ErrorKind::Internal, "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
    Q lc = den_.lead_coeff();
    if (lc != 1) {
        num_ = num_.scaled(Q(1) / lc);
        den_ = den_.scaled(Q(1) / lc);
    }
}

Poly RatFunc::as_polynomial() const {
    if (!is_polynomial()) fail(ErrorKind::NonPolynomialCoefficients, "rational function is not polynomial");
    return num_.scaled(Q(1) / den_.lead_coeff());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorKind::Internal, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator<(const RatFunc& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_ < o.num_;
}

RatFunc RatFunc::derivative(int idx) const {
    return RatFunc(num_.derivative(idx) * den_ - num_ * den_.derivative(idx), den_ * den_);
}

RatFunc RatFunc::shifted(int idx, const Q& c) const {
    return RatFunc(num_.shifted(idx, c), den_.shifted(idx, c));
}

RatFunc RatFunc::at_zero(int idx) const {
    Poly d = den_.at_zero(idx);
    if (d.is_zero()) fail(ErrorKind::PoleOnStratum, "denominator vanishes on the stratum");
    return RatFunc(num_.at_zero(idx), d);
}

Q RatFunc::eval_origin() const {
    Q d = den_.eval_origin();
    if (d == 0) fail(ErrorKind::Internal, "pole at origin");
    return num_.eval_origin() / d;
}

RatFunc RatFunc::permuted(const std::vector<int>& perm) const {
    return RatFunc(num_.permuted(perm), den_.permuted(perm));
}

std::string RatFunc::str(const std::vector<std::string>& names) const {
    if (is_polynomial()) return as_polynomial().str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

} // namespace logsymp
