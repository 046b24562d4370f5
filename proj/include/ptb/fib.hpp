#ifndef PTB_FIB_HPP
#define PTB_FIB_HPP

#include <optional>
#include <set>
#include <vector>

#include "ptb/intpoly.hpp"

namespace ptb {

struct not_divisible_by_u : std::runtime_error {
    explicit not_divisible_by_u(const std::string& m) : std::runtime_error(m) {}
};
struct undefined_for_n : std::runtime_error {
    explicit undefined_for_n(const std::string& m) : std::runtime_error(m) {}
};

/// n mod m in {0, ..., m-1} for any sign of n
inline int imod(long n, int m) {
    int r = static_cast<int>(n % m);
    return r < 0 ? r + m : r;
}

/// f_n: f_0 = 0, f_1 = 1, f_{n-1} + f_{n+1} = u f_n, and f_{-n} = -f_n.
/// Memoized; safe for concurrent readers.
IntPoly fib(int n);

struct FactorFamily {
    IntPoly h, j, k, l;
};
/// The parity-split factor families of f_n.
FactorFamily family(int n);

struct HatFamily {
    IntPoly h_hat, l_hat;
};
/// h and l with the forced factor of u removed when n = 2 mod 4.
HatFamily hats(int n);

struct IdentityReport {
    bool f_eq_jl = false;            // f_n = j_n l_n
    bool fplus_eq_jk = false;        // f_{n+1} - 1 = j_n k_n
    bool fminus_eq_hl = false;       // f_{n-1} - 1 = h_n l_n
    bool fminusu_eq_hk = false;      // f_n - u = h_n k_n
    bool product_identity = false;   // (f_{n+1}-1)(f_{n-1}-1) = f_n (f_n - u)
    bool psl_identity = false;       // (f_{n-1}+1)(f_{n+1}+1) = f_n (u + f_n)
    bool all() const {
        return f_eq_jl && fplus_eq_jk && fminus_eq_hl && fminusu_eq_hk && product_identity &&
               psl_identity;
    }
};
IdentityReport identity_suite(int n);

enum class GcdClass { unit, u, u2_minus_2 };
struct GcdPair {
    IntPoly value;
    GcdClass expected;
    bool matches;
};
struct GcdClassification {
    GcdPair hj, kl, hk, jk, hl;
    bool all() const {
        return hj.matches && kl.matches && hk.matches && jk.matches && hl.matches;
    }
};
/// Exact gcds of the five pairs, classified against the common-factor table.
GcdClassification gcd_classification(int n);

/// Exact representative of 2 cos(2 pi num / den), canonicalized by cosine
/// evenness so that equality is integer arithmetic on reduced fractions.
struct TraceAngle {
    long num = 0;   // 0 <= num <= den/2 after canonicalization
    long den = 1;

    TraceAngle() = default;
    TraceAngle(long k, long N);

    double value() const;
    bool is_two() const { return num == 0; }
    bool is_minus_two() const { return den == 2 * num && num > 0; }
    /// The squared value 2 + 2 cos(2 theta), returned as the doubled angle;
    /// (2 cos theta)^2 = 2 + value(doubled angle).
    TraceAngle doubled() const { return TraceAngle(2 * num, den); }
    double squared_value() const { return 2.0 + doubled().value(); }

    auto operator<=>(const TraceAngle&) const = default;
};

enum class RootSetLabel { R, Rfib };

struct RootSet {
    RootSetLabel label = RootSetLabel::R;
    int N = 1;
    std::set<TraceAngle> elements;

    bool contains(const TraceAngle& t) const { return elements.count(t) > 0; }
    bool contains_value(double v, double tol) const;
    std::vector<double> values() const;
    std::set<TraceAngle> minus(const RootSet& o) const;
};

/// R_N or R_N^fib (the latter drops the values +-2); N may be negative (|N| is
/// used) but not zero.
RootSet root_set(RootSetLabel label, int N);

enum class FamilyPoly { f, h, l, k };

/// The exact zero set of the named family polynomial as a set of trace
/// angles: f_n vanishes on R_{2n}^fib, l_n on R_{2n}^fib - R_n^fib, h_n on
/// R_{n-2}^fib, and k_n = l_{n+2} on R_{2(n+2)}^fib - R_{n+2}^fib.
RootSet zero_set(FamilyPoly which, int n);
/// Same with the angle of value 0 dropped when n = 2 mod 4 (hatted variants).
RootSet zero_set_hatted(FamilyPoly which, int n);

}  // namespace ptb

#endif
