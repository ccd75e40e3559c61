#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace logsymp {

int total_degree(const ExpVec& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographic, earlier variable dominates
}

Poly Poly::constant(int nvars, const Q& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
}

Poly Poly::variable(int nvars, int idx, int power) {
    Poly p(nvars);
    ExpVec e(nvars, 0);
    e[idx] = power;
    p.terms_[e] = 1;
    return p;
}

Poly Poly::monomial(const ExpVec& e, const Q& c) {
    Poly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

const Q& Poly::coeff(const ExpVec& e) const {
    static const Q zero(0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

void Poly::set_coeff(const ExpVec& e, const Q& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

const ExpVec& Poly::lead_exp() const {
    if (terms_.empty()) fail(ErrorKind::Internal, "lead_exp of zero polynomial");
    return terms_.begin()->first;
}

const Q& Poly::lead_coeff() const {
    if (terms_.empty()) fail(ErrorKind::Internal, "lead_coeff of zero polynomial");
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e = exp_add(ea, eb);
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Q c = ca * cb;
                if (c != 0) r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::scaled(const Q& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto a = terms_.begin(), b = o.terms_.begin();
    GrlexGreater gt;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (gt(a->first, b->first)) return false;
        if (gt(b->first, a->first)) return true;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

Poly Poly::derivative(int idx) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        ExpVec f = e;
        f[idx] -= 1;
        r.terms_[f] = c * e[idx];
    }
    return r;
}

Poly Poly::shifted(int idx, const Q& c) const {
    if (c == 0) return *this;
    Poly r(nvars_);
    for (const auto& [e, k] : terms_) {
        // (x+c)^n expanded by binomials
        int n = e[idx];
        Q binom = 1, cpow = 1;
        for (int j = n; j >= 0; --j) {
            ExpVec f = e;
            f[idx] = j;
            r += Poly::monomial(f, k * binom * cpow);
            binom = binom * j / (n - j + 1);
            cpow *= c;
        }
    }
    return r;
}

Poly Poly::at_zero(int idx) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[idx] == 0) r.terms_[e] = c;
    return r;
}

Q Poly::eval_origin() const {
    return coeff(ExpVec(nvars_, 0));
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly rem = *this;
    Poly quo(nvars_);
    const ExpVec& dl = d.lead_exp();
    while (!rem.is_zero()) {
        const ExpVec& rl = rem.lead_exp();
        ExpVec q(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            q[i] = rl[i] - dl[i];
            if (q[i] < 0) return std::nullopt;
        }
        Q qc = rem.lead_coeff() / d.lead_coeff();
        Poly t = Poly::monomial(q, qc);
        quo += t;
        rem -= t * d;
    }
    return quo;
}

Poly Poly::permuted(const std::vector<int>& perm) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExpVec f(nvars_);
        for (int j = 0; j < nvars_; ++j) f[j] = e[perm[j]];
        r.terms_[f] = c;
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Q(1) / lead_coeff());
}

namespace {

std::string q_str(const Q& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Q a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = total_degree(e) > 0;
        bool wrote = false;
        if (a != 1 || !any_var) {
            os << q_str(a);
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD via primitive pseudo-remainder sequences, recursing over variables.

namespace {

int degree_in(const Poly& p, int v) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

bool involves(const Poly& p, int v) { return degree_in(p, v) > 0; }

// Coefficients of p as a univariate polynomial in v; each entry has v-degree 0.
std::vector<Poly> univariate_coeffs(const Poly& p, int v) {
    std::vector<Poly> cs(degree_in(p, v) + 1, Poly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec f = e;
        int k = f[v];
        f[v] = 0;
        cs[k] += Poly::monomial(f, c);
    }
    return cs;
}

Poly content_in(const Poly& p, int v) {
    Poly g(p.nvars());
    for (const Poly& c : univariate_coeffs(p, v))
        if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
}

Poly primitive_in(const Poly& p, int v) {
    Poly c = content_in(p, v);
    auto q = p.divided_by(c);
    if (!q) fail(ErrorKind::Internal, "content does not divide polynomial");
    return *q;
}

// Pseudo-remainder of a by b in variable v. Each step cancels the leading
// v-term exactly, so deg_v strictly drops.
Poly pseudo_rem(Poly a, const Poly& b, int v) {
    int db = degree_in(b, v);
    const Poly blc = univariate_coeffs(b, v)[db];
    while (!a.is_zero()) {
        int da = degree_in(a, v);
        if (da < db) break;
        Poly alc = univariate_coeffs(a, v)[da];
        Poly shift = Poly::variable(a.nvars(), v, da - db);
        a = a * blc - b * (alc * shift);
    }
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), 1);

    // main variable: first one occurring in either operand
    int v = -1;
    for (int i = 0; i < a.nvars() && v < 0; ++i)
        if (involves(a, i) || involves(b, i)) v = i;
    if (v < 0) return Poly::constant(a.nvars(), 1);

    if (!involves(b, v)) return poly_gcd(content_in(a, v), b).monic();
    if (!involves(a, v)) return poly_gcd(content_in(b, v), a).monic();

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cont = poly_gcd(ca, cb);
    Poly A = primitive_in(a, v), B = primitive_in(b, v);
    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);

    while (true) {
        Poly R = pseudo_rem(A, B, v);
        if (R.is_zero()) return (cont * B).monic();
        if (degree_in(R, v) == 0) return cont.monic();
        A = B;
        B = primitive_in(R, v);
    }
}

} // namespace logsymp
