#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chart.hpp"
#include "ratfunc.hpp"

namespace logsymp {

namespace detail {

/// Shared layout of graded objects: wedge-mask -> coefficient.
class GradedComps {
public:
    GradedComps() : degree_(0) {}
    GradedComps(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {}

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<Mask, RatFunc>& comps() const { return comps_; }

    RatFunc coeff(Mask m) const;
    void add(Mask m, const RatFunc& c);
    void set(Mask m, const RatFunc& c);

    bool has_polynomial_coeffs() const;

protected:
    ChartPtr chart_;
    int degree_;
    std::map<Mask, RatFunc> comps_;
};

} // namespace detail

/// Log differential form: component on mask S is wrt dlog(x_i), i in S
/// divisorial, and dx_j, j in S plain.
class LogForm : public detail::GradedComps {
public:
    LogForm() = default;
    LogForm(ChartPtr chart, int degree) : GradedComps(std::move(chart), degree) {}

    static LogForm zero(ChartPtr chart, int degree) { return LogForm(std::move(chart), degree); }
    static LogForm basis(ChartPtr chart, Mask mask, const RatFunc& coeff);
    static LogForm function(ChartPtr chart, const RatFunc& f);

    LogForm operator+(const LogForm& o) const;
    LogForm operator-(const LogForm& o) const;
    LogForm operator-() const;
    LogForm scaled(const RatFunc& c) const;
    LogForm scaled(const Q& c) const;
    bool operator==(const LogForm& o) const;
    bool operator!=(const LogForm& o) const { return !(*this == o); }

    /// Multidegree of one basis term: exponents of the monomial plus e_j for
    /// each plain dx_j in the mask (dlog carries weight zero).
    ExpVec term_weight(Mask mask, const ExpVec& mono) const;
};

/// Log polyvector field: component on mask S is wrt x_i d/dx_i (divisorial)
/// and d/dx_j (plain).
class LogMultiVec : public detail::GradedComps {
public:
    LogMultiVec() = default;
    LogMultiVec(ChartPtr chart, int degree) : GradedComps(std::move(chart), degree) {}

    static LogMultiVec zero(ChartPtr chart, int degree) { return LogMultiVec(std::move(chart), degree); }
    static LogMultiVec basis(ChartPtr chart, Mask mask, const RatFunc& coeff);
    /// Ordinary d/dx_I as a log polyvector (coefficient 1/x_i on divisorial i).
    static LogMultiVec partials(ChartPtr chart, Mask mask);

    LogMultiVec operator+(const LogMultiVec& o) const;
    LogMultiVec operator-(const LogMultiVec& o) const;
    LogMultiVec operator-() const;
    LogMultiVec scaled(const RatFunc& c) const;
    bool operator==(const LogMultiVec& o) const;
    bool operator!=(const LogMultiVec& o) const { return !(*this == o); }
};

// --- exterior algebra ------------------------------------------------------

LogForm wedge(const LogForm& a, const LogForm& b);
LogMultiVec wedge(const LogMultiVec& a, const LogMultiVec& b);
LogMultiVec wedge_power(const LogMultiVec& p, int k);
LogForm wedge_power(const LogForm& w, int k);

/// Full/partial interior multiplication per the global sign convention
/// <v_{i1}..v_{ip}, a_{j1}..a_{jk}> = sgn(S in T) a_{T\S} on basis elements.
/// Throws DegreeError when deg P > deg w.
LogForm contract(const LogMultiVec& P, const LogForm& w);
/// Operator-layer contraction: returns 0 instead of rejecting low degrees.
LogForm contract_or_zero(const LogMultiVec& P, const LogForm& w);

LogForm ext_derivative(const LogForm& w);

/// Schouten-Nijenhuis bracket; rejects rational-function coefficients.
LogMultiVec schouten(const LogMultiVec& P, const LogMultiVec& Q);

/// Koszul-Brylinski operator d i_P - i_P d.
LogForm lie_poisson_operator(const LogMultiVec& Pi, const LogForm& w);

/// (j+lambda) d i_P - (j+lambda-1) i_P d on a degree-j form.
LogForm delta_lambda(const LogMultiVec& Pi, const Q& lambda, const LogForm& w);

std::vector<std::pair<ExpVec, LogForm>> multidegree_decompose(const LogForm& w);

LogForm translate_chart(const LogForm& w, const std::vector<Q>& center);
LogMultiVec translate_chart(const LogMultiVec& p, const std::vector<Q>& center);

/// Pullback along the inclusion of the stratum {x_i = 0 : i in branch}.
/// Divisorial mask bits over the branch must carry vanishing residue.
LogForm pullback_to_stratum(const LogForm& w, const std::vector<int>& branch);
ChartPtr stratum_chart(const ChartPtr& chart, const std::vector<int>& branch);

/// dx-basis components: coefficient on mask T equals the log coefficient
/// divided by prod of divisorial x_i, i in T.
std::map<Mask, RatFunc> dx_components(const LogForm& w);
/// A form is holomorphic when all dx-basis components are polynomial.
bool is_holomorphic(const LogForm& w);
/// Build a LogForm from dx-basis components.
LogForm from_dx_components(ChartPtr chart, int degree, const std::map<Mask, RatFunc>& comps);

std::string to_string(const LogForm& w);
std::string to_string(const LogMultiVec& p);

} // namespace logsymp
