#include "ptb/fib.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

namespace ptb {

IntPoly fib(int n) {
    static std::unordered_map<int, IntPoly> memo;
    static std::shared_mutex mu;
    {
        std::shared_lock lk(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    IntPoly r;
    if (n == 0) {
        r = IntPoly();
    } else if (n < 0) {
        r = -fib(-n);
    } else {
        IntPoly prev;         // f_0
        IntPoly cur{1};       // f_1
        const IntPoly u{0, 1};
        for (int k = 1; k < n; ++k) {
            IntPoly next = u * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        r = cur;
    }
    std::unique_lock lk(mu);
    memo.emplace(n, r);
    return r;
}

FactorFamily family(int n) {
    FactorFamily out;
    if (imod(n, 2) == 0) {
        int m = n / 2;
        out.h = fib(m - 1);
        out.j = fib(m);
        out.k = fib(m + 2) - fib(m);
        out.l = fib(m + 1) - fib(m - 1);
    } else {
        int m = (n - 1) / 2;  // n - 1 is even, so this is exact for any sign
        out.h = fib(m) + fib(m - 1);
        out.j = fib(m + 1) + fib(m);
        out.k = fib(m + 2) - fib(m + 1);
        out.l = fib(m + 1) - fib(m);
    }
    return out;
}

HatFamily hats(int n) {
    FactorFamily fam = family(n);
    HatFamily out;
    if (imod(n, 4) == 2) {
        const IntPoly u{0, 1};
        try {
            out.h_hat = IntPoly::divrem_exact(fam.h, u);
            out.l_hat = IntPoly::divrem_exact(fam.l, u);
        } catch (const nonzero_remainder&) {
            throw not_divisible_by_u("h_n or l_n not divisible by u with n = 2 mod 4");
        }
    } else {
        out.h_hat = fam.h;
        out.l_hat = fam.l;
    }
    return out;
}

IdentityReport identity_suite(int n) {
    FactorFamily fam = family(n);
    IntPoly fn = fib(n), fp = fib(n + 1), fm = fib(n - 1);
    const IntPoly u{0, 1};
    const IntPoly one{1};
    IdentityReport r;
    r.f_eq_jl = (fn == fam.j * fam.l);
    r.fplus_eq_jk = (fp - one == fam.j * fam.k);
    r.fminus_eq_hl = (fm - one == fam.h * fam.l);
    r.fminusu_eq_hk = (fn - u == fam.h * fam.k);
    r.product_identity = ((fp - one) * (fm - one) == fn * (fn - u));
    r.psl_identity = ((fm + one) * (fp + one) == fn * (u + fn));
    return r;
}

namespace {

GcdPair classify(const IntPoly& p, const IntPoly& q, GcdClass expected) {
    GcdPair out;
    out.value = IntPoly::gcd(p, q);
    out.expected = expected;
    switch (expected) {
        case GcdClass::unit:
            out.matches = out.value.is_constant();
            break;
        case GcdClass::u:
            out.matches = (out.value == IntPoly{0, 1});
            break;
        case GcdClass::u2_minus_2:
            out.matches = (out.value == IntPoly{-2, 0, 1});
            break;
    }
    return out;
}

}  // namespace

GcdClassification gcd_classification(int n) {
    FactorFamily fam = family(n);
    GcdClassification out;
    out.hj = classify(fam.h, fam.j, GcdClass::unit);
    out.kl = classify(fam.k, fam.l, GcdClass::unit);
    // h_n and k_n share the factor u^2 - 2 exactly when n = 2 mod 8: their
    // zero sets meet in +-sqrt(2) = 2cos(pi/4) iff s^4 = -1 is compatible
    // with s^(n-2) = 1, i.e. 8 | n - 2.
    out.hk = classify(fam.h, fam.k, imod(n, 8) == 2 ? GcdClass::u2_minus_2 : GcdClass::unit);
    out.jk = classify(fam.j, fam.k, imod(n, 4) == 0 ? GcdClass::u : GcdClass::unit);
    out.hl = classify(fam.h, fam.l, imod(n, 4) == 2 ? GcdClass::u : GcdClass::unit);
    return out;
}

TraceAngle::TraceAngle(long k, long N) {
    if (N == 0) throw undefined_for_n("trace angle with zero denominator");
    if (N < 0) N = -N;
    k = ((k % N) + N) % N;
    if (2 * k > N) k = N - k;  // cosine evenness
    long g = std::gcd(k, N);
    num = k / g;
    den = N / g;
}

double TraceAngle::value() const {
    const double two_pi = 6.283185307179586476925286766559;
    return 2.0 * std::cos(two_pi * static_cast<double>(num) / static_cast<double>(den));
}

bool RootSet::contains_value(double v, double tol) const {
    for (const auto& t : elements)
        if (std::abs(t.value() - v) <= tol) return true;
    return false;
}

std::vector<double> RootSet::values() const {
    std::vector<double> out;
    out.reserve(elements.size());
    for (const auto& t : elements) out.push_back(t.value());
    return out;
}

std::set<TraceAngle> RootSet::minus(const RootSet& o) const {
    std::set<TraceAngle> out;
    for (const auto& t : elements)
        if (!o.elements.count(t)) out.insert(t);
    return out;
}

RootSet root_set(RootSetLabel label, int N) {
    if (N == 0) throw undefined_for_n("root set with N = 0");
    int M = std::abs(N);
    RootSet out;
    out.label = label;
    out.N = N;
    for (int k = 0; k < M; ++k) {
        TraceAngle t(k, M);
        if (label == RootSetLabel::Rfib && (t.is_two() || t.is_minus_two())) continue;
        out.elements.insert(t);
    }
    return out;
}

RootSet zero_set(FamilyPoly which, int n) {
    switch (which) {
        case FamilyPoly::f: {
            if (n == 0) throw undefined_for_n("f_0 is identically zero");
            return root_set(RootSetLabel::Rfib, 2 * n);
        }
        case FamilyPoly::l: {
            RootSet big = root_set(RootSetLabel::Rfib, 2 * n);
            RootSet small = root_set(RootSetLabel::Rfib, n);
            RootSet out;
            out.label = RootSetLabel::Rfib;
            out.N = 2 * n;
            out.elements = big.minus(small);
            return out;
        }
        case FamilyPoly::h:
            return root_set(RootSetLabel::Rfib, n - 2);
        case FamilyPoly::k:
            return zero_set(FamilyPoly::l, n + 2);
    }
    throw std::logic_error("unreachable");
}

RootSet zero_set_hatted(FamilyPoly which, int n) {
    RootSet out = zero_set(which, n);
    if (imod(n, 4) == 2) out.elements.erase(TraceAngle(1, 4));
    return out;
}

}  // namespace ptb
