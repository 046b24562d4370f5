#ifndef PTB_ARITH_HPP
#define PTB_ARITH_HPP

#include "ptb/variety.hpp"

namespace ptb {

struct certificate_failed : std::runtime_error {
    explicit certificate_failed(const std::string& m) : std::runtime_error(m) {}
};
struct parabolic_y_two : std::runtime_error {
    explicit parabolic_y_two(const std::string& m) : std::runtime_error(m) {}
};
struct singular_i_minus_b : std::runtime_error {
    explicit singular_i_minus_b(const std::string& m) : std::runtime_error(m) {}
};
struct recovery_failed : std::runtime_error {
    explicit recovery_failed(const std::string& m) : std::runtime_error(m) {}
};

/// p_n(y) = f_{n+1}(y) - f_{n-1}(y) - y^2 + 6; identical for n and -n.
IntPoly trace_poly(int n);
/// p_n with the forced (y+2) factor removed when n is odd.
IntPoly trace_poly_hat(int n);

struct TraceFieldCert {
    int n = 0;
    IntPoly phat;
    int degree = 0;
    IntPoly b_poly;         // b^2N - b^(N+2) + 4 b^N - b^(N-2) + 1, N = |n|
    IntPoly parity_factor;  // q_m for even N, r_N/(c^2+1) for odd N
    IntPoly r_poly;         // odd N: r_N(c) = c^2N - c^(N+2) + c^(N-2) + 1
    std::vector<std::pair<int, IntPoly>> cyclotomic_hits;  // nonconstant gcds found
    bool certified = false;
};
/// Minimal-polynomial data for the trace field with the no-cyclotomic-factor
/// certificate (the Ljunggren hypothesis, machine-checked).
TraceFieldCert trace_field(int n);

struct DiscreteFaithfulPoint {
    ComplexVal y;    // root of phat
    int eps = 1;     // z = 2 eps
    int branch = 1;  // sign of sqrt(y^2 - 8) in x = eps (y -+ sqrt(y^2-8))/2
    VarietyPoint point;
};
/// All candidate points passing chi(lambda) = -2, 2 + x^2 - eps x y = 0, and
/// the phi system, each to 1e-9; |n| > 2.
std::vector<DiscreteFaithfulPoint> discrete_faithful(int n);

/// Twisted Alexander polynomial T^{-1} + Z + T with Z = 2(z-x)/(y-2).
struct AlexanderRecord {
    cdouble Z;
};
AlexanderRecord twisted_alexander(const VarietyPoint& p);
cdouble twisted_alexander_eval(const VarietyPoint& p, cdouble T);

/// Independent Fox-calculus determinant evaluation at T, normalized to the
/// symmetric form; matches the closed form on the irreducible locus.
cdouble fox_calculus_oracle(const VarietyPoint& p, int n, cdouble T);

/// (|n| + sqrt(n^2 - 4)) / 2; |n| > 2.
double dilatation(int n);

struct GenusRelation {
    int d = 0;
    int g = 0;
    int alpha = 0;
    bool holds = false;
};
/// d = floor(dilatation) = |n| - 1 against 2 g + alpha.
GenusRelation genus_relation(int n);

VarietyPoint spin_action(const VarietyPoint& p, int n);
VarietyPoint flip_action(const VarietyPoint& p);

/// Characters of the meridian quotient: (y, y, 2) over y in R_{n+2}
/// (a line sample for n = -2).
std::vector<VarietyPoint> filling_characters(int n);

struct SpecialFillingFamily {
    std::string quotient;  // the peripheral element killed
    std::vector<VarietyPoint> points;
};
/// The additional cyclic-quotient families for n in {-1, 0, 1, 2, 3, 5},
/// parameterized by k where the quotient is; empty for other n.
std::vector<SpecialFillingFamily> filling_characters_special(int n, int k);

struct LensFilling {
    std::string slope;
    std::string lens;
};
/// Static lens-space filling data for M_n = W(p, .), keyed by p.
std::vector<LensFilling> filling_table(int p);

}  // namespace ptb

#endif
