#include "forms.hpp"

#include <algorithm>
#include <sstream>

namespace logsymp {

namespace detail {

RatFunc GradedComps::coeff(Mask m) const {
    auto it = comps_.find(m);
    if (it == comps_.end()) return RatFunc::zero(chart_ ? chart_->dim() : 0);
    return it->second;
}

void GradedComps::add(Mask m, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = comps_.find(m);
    if (it == comps_.end()) {
        comps_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

void GradedComps::set(Mask m, const RatFunc& c) {
    if (c.is_zero())
        comps_.erase(m);
    else
        comps_[m] = c;
}

bool GradedComps::has_polynomial_coeffs() const {
    for (const auto& [m, c] : comps_)
        if (!c.is_polynomial()) return false;
    return true;
}

} // namespace detail

LogForm LogForm::basis(ChartPtr chart, Mask mask, const RatFunc& coeff) {
    LogForm w(std::move(chart), popcount(mask));
    w.add(mask, coeff);
    return w;
}

LogForm LogForm::function(ChartPtr chart, const RatFunc& f) {
    LogForm w(std::move(chart), 0);
    w.add(0, f);
    return w;
}

LogForm LogForm::operator+(const LogForm& o) const {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        fail(ErrorKind::DegreeError, "adding forms of different degrees");
    LogForm r = *this;
    if (r.is_zero()) r.degree_ = o.degree_;
    for (const auto& [m, c] : o.comps_) r.add(m, c);
    return r;
}

LogForm LogForm::operator-(const LogForm& o) const { return *this + (-o); }

LogForm LogForm::operator-() const {
    LogForm r = *this;
    for (auto& [m, c] : r.comps_) c = -c;
    return r;
}

LogForm LogForm::scaled(const RatFunc& c) const {
    LogForm r(chart_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : comps_) r.add(m, k * c);
    return r;
}

LogForm LogForm::scaled(const Q& c) const {
    return scaled(RatFunc::constant(chart_ ? chart_->dim() : 0, c));
}

bool LogForm::operator==(const LogForm& o) const {
    if (!chart_ || !o.chart_) return comps_.empty() && o.comps_.empty();
    return chart_->same_as(*o.chart_) && comps_ == o.comps_;
}

ExpVec LogForm::term_weight(Mask mask, const ExpVec& mono) const {
    ExpVec w = mono;
    for (int i = chart_->divisor_count(); i < chart_->dim(); ++i)
        if (mask_contains(mask, i)) w[i] += 1;
    return w;
}

LogMultiVec LogMultiVec::basis(ChartPtr chart, Mask mask, const RatFunc& coeff) {
    LogMultiVec p(std::move(chart), popcount(mask));
    p.add(mask, coeff);
    return p;
}

LogMultiVec LogMultiVec::partials(ChartPtr chart, Mask mask) {
    int d = chart->dim();
    Poly den = Poly::constant(d, 1);
    for (int i : mask_indices(mask))
        if (chart->is_divisorial(i)) den = den * Poly::variable(d, i);
    LogMultiVec p(chart, popcount(mask));
    p.add(mask, RatFunc(Poly::constant(d, 1), den));
    return p;
}

LogMultiVec LogMultiVec::operator+(const LogMultiVec& o) const {
    require_same_chart(chart_, o.chart_);
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        fail(ErrorKind::DegreeError, "adding polyvectors of different degrees");
    LogMultiVec r = *this;
    if (r.is_zero()) r.degree_ = o.degree_;
    for (const auto& [m, c] : o.comps_) r.add(m, c);
    return r;
}

LogMultiVec LogMultiVec::operator-(const LogMultiVec& o) const { return *this + (-o); }

LogMultiVec LogMultiVec::operator-() const {
    LogMultiVec r = *this;
    for (auto& [m, c] : r.comps_) c = -c;
    return r;
}

LogMultiVec LogMultiVec::scaled(const RatFunc& c) const {
    LogMultiVec r(chart_, degree_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : comps_) r.add(m, k * c);
    return r;
}

bool LogMultiVec::operator==(const LogMultiVec& o) const {
    if (!chart_ || !o.chart_) return comps_.empty() && o.comps_.empty();
    return chart_->same_as(*o.chart_) && comps_ == o.comps_;
}

// --- wedge -----------------------------------------------------------------

namespace {

template <class T>
T wedge_impl(const T& a, const T& b) {
    require_same_chart(a.chart(), b.chart());
    T r(a.chart(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.comps())
        for (const auto& [mb, cb] : b.comps()) {
            if (ma & mb) continue;
            int s = wedge_sign(ma, mb);
            r.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

} // namespace

LogForm wedge(const LogForm& a, const LogForm& b) { return wedge_impl(a, b); }
LogMultiVec wedge(const LogMultiVec& a, const LogMultiVec& b) { return wedge_impl(a, b); }

LogMultiVec wedge_power(const LogMultiVec& p, int k) {
    LogMultiVec r = LogMultiVec::basis(p.chart(), 0, RatFunc::constant(p.chart()->dim(), 1));
    for (int i = 0; i < k; ++i) r = wedge(r, p);
    return r;
}

LogForm wedge_power(const LogForm& w, int k) {
    LogForm r = LogForm::function(w.chart(), RatFunc::constant(w.chart()->dim(), 1));
    for (int i = 0; i < k; ++i) r = wedge(r, w);
    return r;
}

// --- contraction -----------------------------------------------------------

LogForm contract(const LogMultiVec& P, const LogForm& w) {
    require_same_chart(P.chart(), w.chart());
    if (P.degree() > w.degree())
        fail(ErrorKind::DegreeError, "contracting with a polyvector of higher degree");
    LogForm r(w.chart(), w.degree() - P.degree());
    for (const auto& [s, cp] : P.comps())
        for (const auto& [t, cw] : w.comps()) {
            if ((s & t) != s) continue;
            int sign = subset_sign(s, t);
            RatFunc c = cp * cw;
            r.add(t & ~s, sign > 0 ? c : -c);
        }
    return r;
}

LogForm contract_or_zero(const LogMultiVec& P, const LogForm& w) {
    if (P.degree() > w.degree()) return LogForm::zero(w.chart(), 0);
    return contract(P, w);
}

// --- exterior derivative ---------------------------------------------------

LogForm ext_derivative(const LogForm& w) {
    const ChartPtr& chart = w.chart();
    int d = chart->dim();
    LogForm r(chart, w.degree() + 1);
    for (const auto& [t, c] : w.comps()) {
        for (int i = 0; i < d; ++i) {
            if (mask_contains(t, i)) continue;
            RatFunc dc = c.derivative(i);
            if (chart->is_divisorial(i)) dc = dc * RatFunc(Poly::variable(d, i));
            if (dc.is_zero()) continue;
            int sign = wedge_sign(1u << i, t);
            r.add(t | (1u << i), sign > 0 ? dc : -dc);
        }
    }
    return r;
}

// --- Schouten bracket ------------------------------------------------------

namespace {

// Ordinary-basis representation: coefficient on d/dx_I masks.
std::map<Mask, Poly> to_ordinary(const LogMultiVec& p) {
    const ChartPtr& chart = p.chart();
    int d = chart->dim();
    std::map<Mask, Poly> r;
    for (const auto& [m, c] : p.comps()) {
        Poly f = c.as_polynomial();
        for (int i : mask_indices(m))
            if (chart->is_divisorial(i)) f = f * Poly::variable(d, i);
        if (!f.is_zero()) r[m] = f;
    }
    return r;
}

LogMultiVec from_ordinary(const ChartPtr& chart, int degree, const std::map<Mask, Poly>& comps) {
    int d = chart->dim();
    LogMultiVec r(chart, degree);
    for (const auto& [m, f] : comps) {
        Poly g = f;
        for (int i : mask_indices(m)) {
            if (!chart->is_divisorial(i)) continue;
            auto q = g.divided_by(Poly::variable(d, i));
            if (!q) fail(ErrorKind::Internal, "bracket left the log polyvector fields");
            g = *q;
        }
        r.add(m, RatFunc(g));
    }
    return r;
}

// Left derivative with respect to the odd generator theta_i.
std::map<Mask, Poly> odd_derivative(const std::map<Mask, Poly>& p, int i) {
    std::map<Mask, Poly> r;
    for (const auto& [m, f] : p) {
        if (!mask_contains(m, i)) continue;
        int sign = popcount(m & ((1u << i) - 1u)) % 2 == 0 ? 1 : -1;
        r[m & ~(1u << i)] = sign > 0 ? f : -f;
    }
    return r;
}

void accumulate_product(std::map<Mask, Poly>& acc, const std::map<Mask, Poly>& a,
                        const std::map<Mask, Poly>& b, int outer_sign) {
    for (const auto& [ma, fa] : a)
        for (const auto& [mb, fb] : b) {
            if (ma & mb) continue;
            int s = wedge_sign(ma, mb) * outer_sign;
            Poly t = fa * fb;
            if (s < 0) t = -t;
            auto it = acc.find(ma | mb);
            if (it == acc.end())
                acc.emplace(ma | mb, std::move(t));
            else
                it->second += t;
        }
}

} // namespace

LogMultiVec schouten(const LogMultiVec& P, const LogMultiVec& Q) {
    require_same_chart(P.chart(), Q.chart());
    if (!P.has_polynomial_coeffs() || !Q.has_polynomial_coeffs())
        fail(ErrorKind::NonPolynomialCoefficients, "Schouten bracket needs polynomial polyvectors");
    const ChartPtr& chart = P.chart();
    int d = chart->dim();
    auto a = to_ordinary(P), b = to_ordinary(Q);
    int p = P.degree(), q = Q.degree();

    // Odd-variable calculus: [P,Q] = P*Q - (-1)^{(p-1)(q-1)} Q*P with
    // A*B = sum_i (dA/dtheta_i)(dB/dx_i).
    std::map<Mask, Poly> acc;
    int swap_sign = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
    for (int i = 0; i < d; ++i) {
        auto da = odd_derivative(a, i);
        if (!da.empty()) {
            std::map<Mask, Poly> db;
            for (const auto& [m, f] : b) {
                Poly g = f.derivative(i);
                if (!g.is_zero()) db[m] = g;
            }
            accumulate_product(acc, da, db, 1);
        }
        auto dqa = odd_derivative(b, i);
        if (!dqa.empty()) {
            std::map<Mask, Poly> dpa;
            for (const auto& [m, f] : a) {
                Poly g = f.derivative(i);
                if (!g.is_zero()) dpa[m] = g;
            }
            accumulate_product(acc, dqa, dpa, -swap_sign);
        }
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return from_ordinary(chart, p + q - 1, acc);
}

// --- Poisson-type operators --------------------------------------------------

LogForm lie_poisson_operator(const LogMultiVec& Pi, const LogForm& w) {
    LogForm a = contract_or_zero(Pi, w);
    LogForm da = a.is_zero() ? LogForm::zero(w.chart(), std::max(0, w.degree() - 1)) : ext_derivative(a);
    LogForm b = contract_or_zero(Pi, ext_derivative(w));
    return da - b;
}

LogForm delta_lambda(const LogMultiVec& Pi, const Q& lambda, const LogForm& w) {
    Q j = w.degree();
    LogForm a = contract_or_zero(Pi, w);
    LogForm da = a.is_zero() ? LogForm::zero(w.chart(), std::max(0, w.degree() - 1)) : ext_derivative(a);
    LogForm b = contract_or_zero(Pi, ext_derivative(w));
    return da.scaled(j + lambda) - b.scaled(j + lambda - 1);
}

// --- multidegree -------------------------------------------------------------

std::vector<std::pair<ExpVec, LogForm>> multidegree_decompose(const LogForm& w) {
    if (!w.has_polynomial_coeffs())
        fail(ErrorKind::NonPolynomialCoefficients, "multidegree decomposition needs polynomial coefficients");
    std::map<ExpVec, LogForm> pieces;
    for (const auto& [m, c] : w.comps()) {
        for (const auto& [e, k] : c.as_polynomial().terms()) {
            ExpVec wt = w.term_weight(m, e);
            auto it = pieces.find(wt);
            if (it == pieces.end())
                it = pieces.emplace(wt, LogForm::zero(w.chart(), w.degree())).first;
            it->second.add(m, RatFunc(Poly::monomial(e, k)));
        }
    }
    return {pieces.begin(), pieces.end()};
}

// --- chart translation -------------------------------------------------------

namespace {

struct Recentering {
    ChartPtr to;              // demoted chart
    std::vector<int> old_of;  // old index per new index
    std::vector<int> new_of;  // new index per old index
    std::vector<Q> center;    // indexed by old variable
};

Recentering plan_recentering(const ChartPtr& chart, const std::vector<Q>& center) {
    if (static_cast<int>(center.size()) != chart->dim())
        fail(ErrorKind::InvalidCenter, "center length does not match chart dimension");
    std::vector<std::string> divisor;
    for (int i = 0; i < chart->divisor_count(); ++i)
        if (center[i] == 0) divisor.push_back(chart->var_name(i));
    Recentering r;
    r.to = Chart::make(chart->var_names(), divisor, chart->half_dim());
    r.center = center;
    r.old_of.resize(chart->dim());
    r.new_of.resize(chart->dim());
    for (int j = 0; j < chart->dim(); ++j) {
        int oi = chart->var_index(r.to->var_name(j));
        r.old_of[j] = oi;
        r.new_of[oi] = j;
    }
    return r;
}

RatFunc move_coeff(const Recentering& plan, const ChartPtr& from, RatFunc c) {
    for (int i = 0; i < from->dim(); ++i)
        if (plan.center[i] != 0) c = c.shifted(i, plan.center[i]);
    c = c.permuted(plan.old_of);
    if (c.den_vanishes_at_origin())
        fail(ErrorKind::InvalidCenter, "translation creates a pole at the new origin");
    return c;
}

} // namespace

LogForm translate_chart(const LogForm& w, const std::vector<Q>& center) {
    const ChartPtr& from = w.chart();
    Recentering plan = plan_recentering(from, center);
    int d = from->dim();
    LogForm r(plan.to, w.degree());
    for (const auto& [m, c] : w.comps()) {
        RatFunc nc = move_coeff(plan, from, c);
        // demoted dlog(x_i + c_i) becomes dx_i / (x_i + c_i) in the new chart
        Mask nm = 0;
        for (int i : mask_indices(m)) {
            int j = plan.new_of[i];
            nm |= (1u << j);
            if (from->is_divisorial(i) && center[i] != 0) {
                Poly den = Poly::variable(d, j) + Poly::constant(d, center[i]);
                nc = nc * RatFunc(Poly::constant(d, 1), den);
            }
        }
        // masks keep their relative order: old order is preserved within each
        // group and demotion moves whole variables, so recompute the sign by
        // sorting the image indices.
        std::vector<int> img;
        for (int i : mask_indices(m)) img.push_back(plan.new_of[i]);
        int sign = 1;
        for (size_t a = 0; a < img.size(); ++a)
            for (size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) sign = -sign;
        r.add(nm, sign > 0 ? nc : -nc);
    }
    return r;
}

LogMultiVec translate_chart(const LogMultiVec& p, const std::vector<Q>& center) {
    const ChartPtr& from = p.chart();
    Recentering plan = plan_recentering(from, center);
    int d = from->dim();
    LogMultiVec r(plan.to, p.degree());
    for (const auto& [m, c] : p.comps()) {
        RatFunc nc = move_coeff(plan, from, c);
        Mask nm = 0;
        for (int i : mask_indices(m)) {
            int j = plan.new_of[i];
            nm |= (1u << j);
            if (from->is_divisorial(i) && center[i] != 0) {
                // x_i d/dx_i = (x + c) d/dx in recentered coordinates
                Poly mult = Poly::variable(d, j) + Poly::constant(d, center[i]);
                nc = nc * RatFunc(mult);
            }
        }
        std::vector<int> img;
        for (int i : mask_indices(m)) img.push_back(plan.new_of[i]);
        int sign = 1;
        for (size_t a = 0; a < img.size(); ++a)
            for (size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) sign = -sign;
        r.add(nm, sign > 0 ? nc : -nc);
    }
    return r;
}

// --- stratum pullback --------------------------------------------------------

ChartPtr stratum_chart(const ChartPtr& chart, const std::vector<int>& branch) {
    std::vector<std::string> vars, divisor;
    Mask bm = mask_of(branch);
    for (int i = 0; i < chart->dim(); ++i) {
        if (mask_contains(bm, i)) {
            if (!chart->is_divisorial(i))
                fail(ErrorKind::Internal, "stratum branch index is not divisorial");
            continue;
        }
        vars.push_back(chart->var_name(i));
        if (chart->is_divisorial(i)) divisor.push_back(chart->var_name(i));
    }
    return Chart::make(vars, divisor);
}

LogForm pullback_to_stratum(const LogForm& w, const std::vector<int>& branch) {
    const ChartPtr& from = w.chart();
    ChartPtr to = stratum_chart(from, branch);
    Mask bm = mask_of(branch);
    int d = from->dim();

    // index map old -> new (surviving variables keep relative order)
    std::vector<int> new_of(d, -1), keep;
    for (int i = 0; i < d; ++i)
        if (!mask_contains(bm, i)) {
            new_of[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }

    LogForm r(to, w.degree());
    for (const auto& [m, c] : w.comps()) {
        if (m & bm) {
            // dlog over a vanishing branch: the coefficient must carry a factor
            // of x_i (vanishing residue), in which case x_i dlog x_i = dx_i and
            // the term pulls back to zero.
            for (int i : mask_indices(m & bm)) {
                if (c.den().at_zero(i).is_zero())
                    fail(ErrorKind::PoleOnStratum, "denominator vanishes on the branch");
                if (!c.num().divisible_by(Poly::variable(d, i)))
                    fail(ErrorKind::PoleOnStratum, "nonvanishing residue along the branch");
            }
            continue;
        }
        RatFunc nc = c;
        for (int i : mask_indices(bm)) nc = nc.at_zero(i);
        if (nc.is_zero()) continue;
        // rebuild coefficients in the smaller variable set
        auto shrink = [&](const Poly& p) {
            Poly out(to->dim());
            for (const auto& [e, k] : p.terms()) {
                ExpVec f(to->dim());
                for (size_t j = 0; j < keep.size(); ++j) f[j] = e[keep[j]];
                out += Poly::monomial(f, k);
            }
            return out;
        };
        RatFunc small(shrink(nc.num()), shrink(nc.den()));
        Mask nm = 0;
        for (int i : mask_indices(m)) nm |= (1u << new_of[i]);
        r.add(nm, small);
    }
    return r;
}

// --- dx-basis helpers ---------------------------------------------------------

std::map<Mask, RatFunc> dx_components(const LogForm& w) {
    const ChartPtr& chart = w.chart();
    int d = chart->dim();
    std::map<Mask, RatFunc> r;
    for (const auto& [m, c] : w.comps()) {
        Poly den = Poly::constant(d, 1);
        for (int i : mask_indices(m))
            if (chart->is_divisorial(i)) den = den * Poly::variable(d, i);
        r[m] = c * RatFunc(Poly::constant(d, 1), den);
    }
    return r;
}

bool is_holomorphic(const LogForm& w) {
    for (const auto& [m, c] : dx_components(w))
        if (!c.is_polynomial()) return false;
    return true;
}

LogForm from_dx_components(ChartPtr chart, int degree, const std::map<Mask, RatFunc>& comps) {
    int d = chart->dim();
    LogForm r(chart, degree);
    for (const auto& [m, c] : comps) {
        Poly mult = Poly::constant(d, 1);
        for (int i : mask_indices(m))
            if (chart->is_divisorial(i)) mult = mult * Poly::variable(d, i);
        r.add(m, c * RatFunc(mult));
    }
    return r;
}

// --- printing ----------------------------------------------------------------

namespace {

template <class T>
std::string print_graded(const T& g, bool covariant) {
    if (g.is_zero()) return "0";
    const ChartPtr& chart = g.chart();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : g.comps()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(chart->var_names()) << ")";
        for (int i : mask_indices(m)) {
            os << "/\\";
            if (covariant)
                os << (chart->is_divisorial(i) ? "dlog(" : "d(") << chart->var_name(i) << ")";
            else
                os << (chart->is_divisorial(i) ? "V(" : "D(") << chart->var_name(i) << ")";
        }
    }
    return os.str();
}

} // namespace

std::string to_string(const LogForm& w) { return print_graded(w, true); }
std::string to_string(const LogMultiVec& p) { return print_graded(p, false); }

} // namespace logsymp
