#ifndef PTB_LAURENT_HPP
#define PTB_LAURENT_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "ptb/intpoly.hpp"

namespace ptb {

struct unbound_variable : std::runtime_error {
    explicit unbound_variable(const std::string& m) : std::runtime_error(m) {}
};
struct zero_unit_value : std::runtime_error {
    explicit zero_unit_value(const std::string& m) : std::runtime_error(m) {}
};
struct non_unit_determinant : std::runtime_error {
    non_unit_determinant() : std::runtime_error("matrix determinant is not 1") {}
};
struct not_trace_expressible : std::runtime_error {
    explicit not_trace_expressible(const std::string& m) : std::runtime_error(m) {}
};

/// The fixed variable universe.  Only a and b are units (may carry negative
/// exponents); s, t, x, y, z are ordinary polynomial variables.
enum Var : int { VA = 0, VB = 1, VS = 2, VT = 3, VX = 4, VY = 5, VZ = 6 };
constexpr int kNumVars = 7;
using Expo = std::array<int, kNumVars>;

/// Multivariate Laurent polynomial over Z in {a, b, s, t, x, y, z}.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(const bigint& c);
    static LaurentPoly variable(Var v, int exp = 1);
    static LaurentPoly monomial(const Expo& e, const bigint& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, bigint>& terms() const { return terms_; }
    bigint coeff(const Expo& e) const;
    bool uses(Var v) const;
    int max_exp(Var v) const;  // 0 for absent variable

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const bigint& c, const LaurentPoly& p);
    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.terms_ == q.terms_;
    }

    LaurentPoly pow(int k) const;  // k >= 0

    /// p(arg) for a univariate IntPoly p, by Horner in the Laurent ring.
    static LaurentPoly eval_intpoly(const IntPoly& p, const LaurentPoly& arg);

    /// Rename every occurrence of `from` into `to` (exponents add).
    LaurentPoly rename(Var from, Var to) const;

    /// Substitute polynomial values for variables (exponents must be >= 0
    /// for every substituted variable).
    LaurentPoly subst(const std::map<Var, LaurentPoly>& bindings) const;

    /// Numeric evaluation; every occurring variable must be bound, and a
    /// variable occurring with negative exponent must not be bound to zero.
    cdouble substitute(const std::map<Var, cdouble>& bindings) const;

    /// Collect as a univariate polynomial in `v` (exponents >= 0 required):
    /// index k holds the coefficient, a LaurentPoly free of `v`.
    std::vector<LaurentPoly> collect(Var v) const;

    /// View as univariate IntPoly in `v`; requires all other variables absent.
    IntPoly to_intpoly(Var v) const;

    /// Terms in graded-lexicographic order (grade = sum of |exponents|).
    std::string to_string() const;

private:
    void add_term(const Expo& e, const bigint& c);
    std::map<Expo, bigint> terms_;
};

/// 2x2 matrix of Laurent polynomials.
struct SymMatrix2 {
    LaurentPoly e11, e12, e21, e22;

    static SymMatrix2 identity();
    LaurentPoly det() const;
    LaurentPoly trace() const { return e11 + e22; }

    friend SymMatrix2 operator*(const SymMatrix2& m, const SymMatrix2& n);
    friend SymMatrix2 operator-(const SymMatrix2& m, const SymMatrix2& n);
    friend bool operator==(const SymMatrix2& m, const SymMatrix2& n) {
        return m.e11 == n.e11 && m.e12 == n.e12 && m.e21 == n.e21 && m.e22 == n.e22;
    }
};

SymMatrix2 mat_mul(const SymMatrix2& m, const SymMatrix2& n);
/// Inverse by adjugate; requires det = 1 exactly.
SymMatrix2 mat_inv_sl2(const SymMatrix2& m);
/// Integer powers; negative powers go through mat_inv_sl2.
SymMatrix2 mat_pow(const SymMatrix2& m, int k);

/// Rewrite p (in a,b,s,t with the pairing s=t) as a polynomial in x, y, z
/// where x = a+1/a, y = b+1/b, z = ab+1/(ab)+s^2.  The result is verified by
/// back-substitution; failure throws not_trace_expressible.
LaurentPoly trace_rewrite(const LaurentPoly& p);

}  // namespace ptb

#endif
