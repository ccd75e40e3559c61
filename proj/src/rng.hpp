#pragma once

#include <cstdint>

#include "forms.hpp"

namespace logsymp {

/// Deterministic generator for reproducible trial suites (splitmix64).
/// Random data follows one documented scheme: rational coefficients are
/// (nonzero numerator in [-9,9]) / (denominator in [1,4]) and monomials have
/// total degree at most 3.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int uniform(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Q coefficient() {
        int num = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
        int den = uniform(1, 4);
        return make_q(num, den);
    }

    ExpVec monomial(int nvars, int maxdeg = 3) {
        ExpVec e(nvars, 0);
        int deg = uniform(0, maxdeg);
        for (int i = 0; i < deg; ++i) e[uniform(0, nvars - 1)] += 1;
        return e;
    }

    Poly poly(int nvars, int maxdeg = 3) {
        Poly p(nvars);
        int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t) p += Poly::monomial(monomial(nvars, maxdeg), coefficient());
        return p;
    }

    LogForm form(const ChartPtr& chart, int degree, int maxdeg = 3) {
        LogForm w(chart, degree);
        int d = chart->dim();
        for (Mask m = 0; m < (1u << d); ++m) {
            if (popcount(m) != degree) continue;
            if (uniform(0, 1) == 0) continue;
            w.add(m, RatFunc(poly(d, maxdeg)));
        }
        if (w.is_zero()) { // keep trials meaningful
            for (Mask m = 0; m < (1u << d); ++m)
                if (popcount(m) == degree) {
                    w.add(m, RatFunc(poly(d, maxdeg)));
                    break;
                }
        }
        return w;
    }

    LogMultiVec multivec(const ChartPtr& chart, int degree, int maxdeg = 2) {
        LogMultiVec p(chart, degree);
        int d = chart->dim();
        for (Mask m = 0; m < (1u << d); ++m) {
            if (popcount(m) != degree) continue;
            if (uniform(0, 1) == 0) continue;
            p.add(m, RatFunc(poly(d, maxdeg)));
        }
        return p;
    }

private:
    std::uint64_t state_;
};

} // namespace logsymp
