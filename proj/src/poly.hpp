#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace logsymp {

using Q = mpq_class;

/// mpq_class(n, d) does not reduce the fraction on its own.
inline Q make_q(long num, long den = 1) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

/// Exponent vector of a monomial; one entry per chart variable.
/// Doubles as the multidegree (WeightVector) of a homogeneous component.
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);
ExpVec exp_add(const ExpVec& a, const ExpVec& b);

/// Graded-lex: higher total degree first, ties broken lexicographically
/// with earlier variables weighing more.
struct GrlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficients stored; all keys have the same length.
class Poly {
public:
    using TermMap = std::map<ExpVec, Q, GrlexGreater>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Q& c);
    static Poly variable(int nvars, int idx, int power = 1);
    static Poly monomial(const ExpVec& e, const Q& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int degree() const; // total degree, -1 for zero

    const TermMap& terms() const { return terms_; }
    const Q& coeff(const ExpVec& e) const;
    void set_coeff(const ExpVec& e, const Q& c);

    /// Leading term in graded-lex order.
    const ExpVec& lead_exp() const;
    const Q& lead_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const Q& c) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;

    /// Partial derivative with respect to variable idx.
    Poly derivative(int idx) const;

    /// Substitute x_idx -> x_idx + c.
    Poly shifted(int idx, const Q& c) const;

    /// Substitute x_idx -> 0.
    Poly at_zero(int idx) const;

    /// Value at the origin.
    Q eval_origin() const;

    /// Exact division; nullopt when not divisible.
    std::optional<Poly> divided_by(const Poly& d) const;
    bool divisible_by(const Poly& d) const { return divided_by(d).has_value(); }

    /// Reorder variables: new var j = old var perm[j].
    Poly permuted(const std::vector<int>& perm) const;

    /// Monic in graded-lex (zero stays zero).
    Poly monic() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    TermMap terms_;
};

/// GCD over Q[x_1..x_d], normalized monic in graded-lex.
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace logsymp
