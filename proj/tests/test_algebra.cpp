#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forms.hpp"
#include "rng.hpp"

using namespace logsymp;

namespace {

ChartPtr chart_xy() { return Chart::make({"x", "y"}, {"x"}); } // x divisorial
ChartPtr chart_plain(int d) {
    std::vector<std::string> v;
    for (int i = 1; i <= d; ++i) v.push_back("x" + std::to_string(i));
    return Chart::make(v, {});
}

RatFunc rf(const ChartPtr& c, const Q& q) { return RatFunc::constant(c->dim(), q); }
RatFunc var(const ChartPtr& c, int i) { return RatFunc(Poly::variable(c->dim(), i)); }

// Independent Jacobiator oracle working directly on polynomial data:
// {f,g} = sum_{i<j} Pi_ij (df/dx_i dg/dx_j - df/dx_j dg/dx_i).
Poly bracket(const std::map<std::pair<int, int>, Poly>& pi, const Poly& f, const Poly& g) {
    Poly r(f.nvars());
    for (const auto& [ij, a] : pi) {
        auto [i, j] = ij;
        r += a * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
    }
    return r;
}

Poly jacobiator(const std::map<std::pair<int, int>, Poly>& pi, const Poly& f, const Poly& g,
                const Poly& h) {
    return bracket(pi, f, bracket(pi, g, h)) + bracket(pi, g, bracket(pi, h, f)) +
           bracket(pi, h, bracket(pi, f, g));
}

} // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = (x + y) * (x + y) * x;
    Poly q = (x + y) * y;
    Poly g = poly_gcd(p, q);
    CHECK(g == x + y);

    auto quo = p.divided_by(x + y);
    REQUIRE(quo.has_value());
    CHECK(*quo == (x + y) * x);
    CHECK(!p.divisible_by(y));

    Poly s = p.shifted(0, Q(1)); // x -> x+1
    Poly expected = (x + y + Poly::constant(2, 1)) * (x + y + Poly::constant(2, 1)) *
                    (x + Poly::constant(2, 1));
    CHECK(s == expected);

    CHECK(Poly::constant(2, 0).is_zero());
    CHECK(p.derivative(1) == ((x + y) * x).scaled(Q(2)));
}

TEST_CASE("rational function normalization") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    RatFunc r(x * x - y * y, (x - y).scaled(Q(3)));
    // gcd cancelled, denominator monic
    CHECK(r.den() == Poly::constant(2, 1));
    CHECK(r.num() == (x + y).scaled(make_q(1, 3)));

    RatFunc f(Poly::constant(2, 1), x);
    RatFunc df = f.derivative(0);
    CHECK(df == RatFunc(-Poly::constant(2, 1), x * x));
}

TEST_CASE("chart canonical order puts divisorial variables first") {
    ChartPtr c = Chart::make({"y1", "x2", "x1", "y2"}, {"x2", "x1"});
    CHECK(c->var_name(0) == "x1");
    CHECK(c->var_name(1) == "x2");
    CHECK(c->var_name(2) == "y1");
    CHECK(c->var_name(3) == "y2");
    CHECK(c->divisor_count() == 2);
}

TEST_CASE("wedge: alternation, basis products, bilinearity") {
    ChartPtr c = chart_xy();
    LogForm dlx = LogForm::basis(c, 1u << 0, rf(c, 1)); // dlog x
    LogForm dy = LogForm::basis(c, 1u << 1, rf(c, 1));

    CHECK(wedge(dy, dy).is_zero());
    LogForm w = wedge(dlx, dy);
    CHECK(w.coeff(0b11) == rf(c, 1));

    // (x2 dlog x1) /\ (x1 dx2) = x1 x2 dlog x1 /\ dx2
    LogForm a = LogForm::basis(c, 1u << 0, var(c, 1));
    LogForm b = LogForm::basis(c, 1u << 1, var(c, 0));
    LogForm ab = wedge(a, b);
    CHECK(ab.coeff(0b11) == var(c, 0) * var(c, 1));

    CHECK(wedge(dy, dlx).coeff(0b11) == rf(c, -1)); // graded commutativity, degree 1
}

TEST_CASE("wedge property: associativity and graded commutativity") {
    for (int d = 2; d <= 6; d += 2) {
        ChartPtr c = chart_plain(d);
        Rng rng(41 + d);
        for (int trial = 0; trial < 10; ++trial) {
            int da = rng.uniform(0, 3), db = rng.uniform(0, 3), dc = rng.uniform(0, 2);
            LogForm a = rng.form(c, da), b = rng.form(c, db), e = rng.form(c, dc);
            CHECK(wedge(wedge(a, b), e) == wedge(a, wedge(b, e)));
            LogForm ab = wedge(a, b), ba = wedge(b, a);
            if ((da * db) % 2 == 1)
                CHECK(ab == -ba);
            else
                CHECK(ab == ba);
        }
    }
}

TEST_CASE("contraction: normalization and shuffle signs") {
    ChartPtr c3 = chart_plain(3);
    LogMultiVec d12 = LogMultiVec::basis(c3, 0b011, rf(c3, 1));
    LogForm dx12 = LogForm::basis(c3, 0b011, rf(c3, 1));
    LogForm dx123 = LogForm::basis(c3, 0b111, rf(c3, 1));

    CHECK(contract(d12, dx12).coeff(0) == rf(c3, 1));
    LogForm r = contract(d12, dx123);
    CHECK(r.degree() == 1);
    CHECK(r.coeff(0b100) == rf(c3, 1)); // dx3

    ChartPtr cxy = chart_xy();
    LogMultiVec pxy = LogMultiVec::basis(cxy, 0b11, rf(cxy, 1)); // x d/dx ^ d/dy
    LogForm w = LogForm::basis(cxy, 0b11, rf(cxy, 1));           // dlog x ^ dy
    CHECK(contract(pxy, w).coeff(0) == rf(cxy, 1));

    CHECK_THROWS_AS(contract(d12, LogForm::basis(c3, 0b001, rf(c3, 1))), Error);
}

TEST_CASE("contraction sign table: iterated contraction on all basis triples") {
    // With this convention, contracting by u /\ v equals contracting by u,
    // then by v: i_{u^v} = i_v i_u.
    for (int d = 2; d <= 4; ++d) {
        ChartPtr c = chart_plain(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (i == j) continue;
                LogMultiVec u = LogMultiVec::basis(c, 1u << i, rf(c, 1));
                LogMultiVec v = LogMultiVec::basis(c, 1u << j, rf(c, 1));
                LogMultiVec uv = wedge(u, v);
                for (Mask t = 0; t < (1u << d); ++t) {
                    if (popcount(t) < 2) continue;
                    LogForm w = LogForm::basis(c, t, rf(c, 1));
                    LogForm lhs = uv.is_zero() ? LogForm::zero(c, popcount(t) - 2)
                                               : contract(uv, w);
                    LogForm rhs = contract(v, contract(u, w));
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("exterior derivative on basic examples") {
    ChartPtr c = chart_xy();
    // d(x dy) = dx /\ dy = x dlog x /\ dy
    LogForm xdy = LogForm::basis(c, 1u << 1, var(c, 0));
    LogForm d1 = ext_derivative(xdy);
    CHECK(d1.coeff(0b11) == var(c, 0));

    // d(dlog x) = 0
    CHECK(ext_derivative(LogForm::basis(c, 1u << 0, rf(c, 1))).is_zero());

    // d(x1 x2 dlog x1) = -dx1 /\ dx2 on a two-divisor chart
    ChartPtr c2 = Chart::make({"x1", "x2"}, {"x1", "x2"});
    LogForm w = LogForm::basis(c2, 0b01, var(c2, 0) * var(c2, 1));
    LogForm dw = ext_derivative(w);
    // -dx1/\dx2 = -x1 x2 dlog x1 /\ dlog x2
    CHECK(dw.coeff(0b11) == -(var(c2, 0) * var(c2, 1)));
}

TEST_CASE("d squared vanishes, including rational coefficients") {
    ChartPtr c = Chart::make({"x1", "x2", "y1", "y2"}, {"x1"});
    Rng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        LogForm w = rng.form(c, rng.uniform(0, 2));
        if (trial % 3 == 0) {
            // throw in a denominator
            RatFunc denom(Poly::constant(4, 1),
                          Poly::variable(4, 2) + Poly::constant(4, 1));
            w = w.scaled(denom);
        }
        CHECK(ext_derivative(ext_derivative(w)).is_zero());
    }
}

TEST_CASE("d preserves multidegree and decomposition recomposes") {
    ChartPtr c = chart_xy();
    // x1 dlog x1 -> single component at weight (1,0)
    LogForm a = LogForm::basis(c, 1u << 0, var(c, 0));
    auto parts = multidegree_decompose(a);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == ExpVec{1, 0});

    // dx1 + x2 dlog x1 -> weights (1,0) and (0,1)
    LogForm b = LogForm::basis(c, 1u << 0, var(c, 0) + var(c, 1));
    parts = multidegree_decompose(b);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first == ExpVec{0, 1});
    CHECK(parts[1].first == ExpVec{1, 0});

    // constant-coefficient log form -> single component at weight 0
    LogForm e = LogForm::basis(c, 1u << 0, rf(c, make_q(5, 3)));
    parts = multidegree_decompose(e);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == ExpVec{0, 0});

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        LogForm w = rng.form(c, rng.uniform(0, 2));
        LogForm sum = LogForm::zero(c, w.degree());
        for (const auto& [wt, piece] : multidegree_decompose(w)) {
            sum = sum + piece;
            // d preserves the weight vector
            LogForm dp = ext_derivative(piece);
            for (const auto& [wt2, piece2] : multidegree_decompose(dp)) CHECK(wt2 == wt);
        }
        CHECK(sum == w);
    }
}

TEST_CASE("contraction against constant polyvectors never raises weight") {
    ChartPtr c = Chart::make({"x1", "x2", "y1", "y2"}, {"x1", "x2"});
    Rng rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        LogMultiVec p(c, 2);
        for (Mask m = 0; m < 16u; ++m)
            if (popcount(m) == 2 && rng.uniform(0, 1))
                p.add(m, rf(c, rng.coefficient()));
        if (p.is_zero()) continue;
        LogForm w = rng.form(c, rng.uniform(2, 3));
        for (const auto& [wt, piece] : multidegree_decompose(w)) {
            LogForm q = contract_or_zero(p, piece);
            if (q.is_zero()) continue;
            for (const auto& [wt2, piece2] : multidegree_decompose(q))
                for (size_t i = 0; i < wt.size(); ++i) CHECK(wt2[i] <= wt[i]);
        }
    }
}

TEST_CASE("schouten bracket: constants, the degenerate example, the Jacobiator oracle") {
    ChartPtr c4 = chart_plain(4);
    LogMultiVec p = LogMultiVec::basis(c4, 0b0011, rf(c4, 1));
    CHECK(schouten(p, p).is_zero());

    // Pi = x3 d1^d2 + x1 d2^d3 + x1 d3^d1 fails Jacobi; bracket lands on x3 d1^d2^d3
    ChartPtr c3 = chart_plain(3);
    LogMultiVec pi(c3, 2);
    pi.add(0b011, var(c3, 2));
    pi.add(0b110, var(c3, 0));
    pi.add(0b101, -var(c3, 0));
    LogMultiVec br = schouten(pi, pi);
    REQUIRE(!br.is_zero());
    CHECK(br.comps().size() == 1);
    CHECK(br.coeff(0b111) == var(c3, 2) * rf(c3, 2));

    // oracle: <[Pi,Pi], dx_a dx_b dx_c> = -2 Jac(x_a, x_b, x_c)
    std::map<std::pair<int, int>, Poly> comp{{{0, 1}, Poly::variable(3, 2)},
                                             {{1, 2}, Poly::variable(3, 0)},
                                             {{0, 2}, -Poly::variable(3, 0)}};
    Poly jac = jacobiator(comp, Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2));
    LogForm dxabc = LogForm::basis(c3, 0b111, rf(c3, 1));
    CHECK(contract(br, dxabc).coeff(0) == RatFunc(jac.scaled(Q(-2))));
}

TEST_CASE("schouten oracle on random bivectors") {
    ChartPtr c = chart_plain(3);
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        std::map<std::pair<int, int>, Poly> comp;
        LogMultiVec pi(c, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Poly a = rng.poly(3, 2);
                comp[{i, j}] = a;
                pi.add(mask_of({i, j}), RatFunc(a));
            }
        LogMultiVec br = schouten(pi, pi);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int e = b + 1; e < 3; ++e) {
                    Poly jac = jacobiator(comp, Poly::variable(3, a), Poly::variable(3, b),
                                          Poly::variable(3, e));
                    LogForm dx = LogForm::basis(c, mask_of({a, b, e}), rf(c, 1));
                    CHECK(contract_or_zero(br, dx).coeff(0) == RatFunc(jac.scaled(Q(-2))));
                }
    }
}

TEST_CASE("schouten graded symmetry and Jacobi identity") {
    ChartPtr c = chart_plain(3);
    Rng rng(19);
    auto sgn = [](int k) { return k % 2 == 0 ? 1 : -1; };
    for (int trial = 0; trial < 6; ++trial) {
        int dp = rng.uniform(1, 2), dq = rng.uniform(1, 2), dr = rng.uniform(1, 2);
        LogMultiVec P = rng.multivec(c, dp, 2), Qv = rng.multivec(c, dq, 2), R = rng.multivec(c, dr, 2);
        if (P.is_zero() || Qv.is_zero() || R.is_zero()) continue;

        // graded anticommutativity: [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
        LogMultiVec lhs = schouten(P, Qv);
        LogMultiVec rhs = schouten(Qv, P).scaled(rf(c, -sgn((dp - 1) * (dq - 1))));
        CHECK(lhs == rhs);

        // graded Jacobi
        LogMultiVec j1 = schouten(P, schouten(Qv, R)).scaled(rf(c, sgn((dp - 1) * (dr - 1))));
        LogMultiVec j2 = schouten(Qv, schouten(R, P)).scaled(rf(c, sgn((dq - 1) * (dp - 1))));
        LogMultiVec j3 = schouten(R, schouten(P, Qv)).scaled(rf(c, sgn((dr - 1) * (dq - 1))));
        CHECK((j1 + j2 + j3).is_zero());
    }
}

TEST_CASE("schouten rejects rational-function coefficients") {
    ChartPtr c = chart_xy();
    LogMultiVec p = LogMultiVec::partials(c, 0b01); // 1/x * (x d/dx)
    CHECK_THROWS_AS(schouten(p, p), Error);
}

TEST_CASE("koszul-brylinski operator") {
    ChartPtr c = chart_xy();
    LogMultiVec pi = LogMultiVec::basis(c, 0b11, rf(c, 1)); // x dx ^ dy field

    // vanishes on 0-forms
    LogForm f = LogForm::function(c, var(c, 0) * var(c, 1));
    CHECK(lie_poisson_operator(pi, f).is_zero());

    // symplectic plane: delta(dx/\dy) = 0
    ChartPtr cs = chart_plain(2);
    LogMultiVec ps = LogMultiVec::basis(cs, 0b11, rf(cs, 1));
    LogForm vol = LogForm::basis(cs, 0b11, rf(cs, 1));
    CHECK(lie_poisson_operator(ps, vol).is_zero());

    // square zero for the log-symplectic plane on seeded trials
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        LogForm w = rng.form(c, rng.uniform(0, 2));
        CHECK(lie_poisson_operator(pi, lie_poisson_operator(pi, w)).is_zero());
    }

    // and nonzero square for the non-Poisson bivector above
    ChartPtr c3 = chart_plain(3);
    LogMultiVec bad(c3, 2);
    bad.add(0b011, var(c3, 2));
    bad.add(0b110, var(c3, 0));
    bad.add(0b101, -var(c3, 0));
    Rng rng2(23);
    bool found = false;
    for (int trial = 0; trial < 20 && !found; ++trial) {
        LogForm w = rng2.form(c3, rng2.uniform(2, 3));
        found = !lie_poisson_operator(bad, lie_poisson_operator(bad, w)).is_zero();
    }
    CHECK(found);
}

TEST_CASE("chart translation") {
    ChartPtr c = chart_xy();
    // translate dlog x by 1 -> dx/(x+1) in the demoted chart
    LogForm dlx = LogForm::basis(c, 1u << 0, rf(c, 1));
    LogForm t = translate_chart(dlx, {Q(1), Q(0)});
    CHECK(t.chart()->divisor_count() == 0);
    int xi = t.chart()->var_index("x");
    RatFunc expected(Poly::constant(2, 1),
                     Poly::variable(2, xi) + Poly::constant(2, 1));
    CHECK(t.coeff(1u << xi) == expected);

    // translate by zero is the identity
    LogForm t0 = translate_chart(dlx, {Q(0), Q(0)});
    CHECK(t0.coeff(1u << 0) == rf(c, 1));
    CHECK(t0.chart()->divisor_count() == 1);

    // translate x d/dx by 1 -> (x+1) d/dx
    LogMultiVec v = LogMultiVec::basis(c, 1u << 0, rf(c, 1));
    LogMultiVec tv = translate_chart(v, {Q(1), Q(0)});
    RatFunc mult(Poly::variable(2, xi) + Poly::constant(2, 1));
    CHECK(tv.coeff(1u << xi) == mult);
}

TEST_CASE("stratum pullback") {
    ChartPtr c = chart_xy();
    // pullback of dx1 to {x1=0} is zero; of f(x,y) dy it is f(0,y) dy
    LogForm dx = LogForm::basis(c, 1u << 0, var(c, 0)); // dx = x dlog x
    LogForm p = pullback_to_stratum(dx, {0});
    CHECK(p.is_zero());

    Poly f = Poly::variable(2, 0) + Poly::variable(2, 1) * Poly::variable(2, 1); // x + y^2
    LogForm fdy = LogForm::basis(c, 1u << 1, RatFunc(f));
    LogForm q = pullback_to_stratum(fdy, {0});
    REQUIRE(q.chart()->dim() == 1);
    CHECK(q.coeff(0b1) == RatFunc(Poly::variable(1, 0) * Poly::variable(1, 0)));

    // a genuine residue refuses to restrict
    LogForm dlx = LogForm::basis(c, 1u << 0, rf(c, 1));
    CHECK_THROWS_AS(pullback_to_stratum(dlx, {0}), Error);
}
