#ifndef PTB_INTPOLY_HPP
#define PTB_INTPOLY_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ptb {

using bigint = mpz_class;
using cdouble = std::complex<double>;

struct nonzero_remainder : std::runtime_error {
    explicit nonzero_remainder(const std::string& m) : std::runtime_error(m) {}
};
struct both_zero : std::runtime_error {
    both_zero() : std::runtime_error("gcd of two zero polynomials") {}
};
struct zero_polynomial : std::runtime_error {
    explicit zero_polynomial(const std::string& m) : std::runtime_error(m) {}
};
struct non_convergence : std::runtime_error {
    explicit non_convergence(const std::string& m) : std::runtime_error(m) {}
};

/// Complex value with an explicit comparison tolerance.
struct ComplexVal {
    cdouble value{0.0, 0.0};
    double tol = 1e-10;

    ComplexVal() = default;
    ComplexVal(double re, double im, double t = 1e-10) : value(re, im), tol(t) {}
    ComplexVal(cdouble v, double t = 1e-10) : value(v), tol(t) {}

    double re() const { return value.real(); }
    double im() const { return value.imag(); }
    bool close_to(const ComplexVal& o) const {
        return std::abs(value - o.value) <= std::max(tol, o.tol);
    }
    bool close_to(cdouble v, double t) const { return std::abs(value - v) <= t; }
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored ascending by degree with no trailing zeros.  The zero polynomial is
/// the empty coefficient list; degree() throws on it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<bigint> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const bigint& c) {
        IntPoly p;
        if (c != 0) p.c_ = {c};
        return p;
    }
    /// c * u^k
    static IntPoly monomial(int k, const bigint& c = bigint(1)) {
        IntPoly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, bigint(0));
            p.c_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const {
        if (c_.empty()) throw zero_polynomial("degree of zero polynomial is undefined");
        return static_cast<int>(c_.size()) - 1;
    }
    /// degree, with the zero polynomial mapped to -1
    int degree_or_neg1() const { return static_cast<int>(c_.size()) - 1; }

    const bigint& coeff(int k) const {
        static const bigint zero(0);
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
        return c_[static_cast<size_t>(k)];
    }
    const bigint& leading() const {
        if (c_.empty()) throw zero_polynomial("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<bigint>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const bigint& c, const IntPoly& p);
    friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.c_ == q.c_; }

    /// p * u^k
    IntPoly shifted(int k) const;

    /// Exact quotient p/d; throws nonzero_remainder when d does not divide p
    /// with an integer-coefficient quotient.
    static IntPoly divrem_exact(const IntPoly& p, const IntPoly& d);

    /// Primitive gcd over Q with positive leading coefficient
    /// (subresultant pseudo-remainder sequence on primitive parts).
    static IntPoly gcd(const IntPoly& p, const IntPoly& q);

    IntPoly derivative() const;
    bool is_squarefree() const;

    /// Horner evaluation in double-precision complex arithmetic.
    cdouble eval(cdouble v) const;
    ComplexVal eval(const ComplexVal& v) const { return ComplexVal(eval(v.value), v.tol); }
    /// Exact evaluation at an integer argument.
    bigint eval_int(const bigint& v) const;

    /// Substitute u -> u^k (coefficient spreading), k >= 1.
    IntPoly compose_power(int k) const;
    /// q with q(u^2) = p(u); requires every odd coefficient to vanish.
    IntPoly even_powers() const;
    /// Reverse coefficients: u^deg * p(1/u).
    IntPoly reversed() const;

    bigint content() const;            // gcd of coefficients, sign of leading
    IntPoly primitive_part() const;    // p / content, positive leading coefficient
    double max_abs_coeff() const;

    std::string to_string(const std::string& var = "u") const;

    /// JSON array of decimal-string coefficients, ascending degree.
    std::string to_json_array() const;
    static IntPoly from_json_array(const std::string& text);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<bigint> c_;
};

/// All complex roots of p with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration from deterministic starting points on a circle; output order is
/// reproducible for a given input.  Throws non_convergence after max_iter.
std::vector<cdouble> roots_complex(const IntPoly& p, double tol = 1e-10, int max_iter = 1000);

/// d-th cyclotomic polynomial, by exact division of u^d - 1 by the proper
/// cyclotomic divisors.  Memoized; safe for concurrent readers.
IntPoly cyclotomic(int d);

}  // namespace ptb

#endif
