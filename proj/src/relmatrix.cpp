#include "ptb/relmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace ptb {

namespace {

LaurentPoly lvar(Var v, int e = 1) { return LaurentPoly::variable(v, e); }
LaurentPoly lconst(long c) { return LaurentPoly::constant(bigint(c)); }

LaurentPoly t_A() { return lvar(VA) + lvar(VA, -1); }
LaurentPoly t_B() { return lvar(VB) + lvar(VB, -1); }
LaurentPoly t_AB() {
    return LaurentPoly::monomial(Expo{1, 1, 0, 0, 0, 0, 0}, 1) +
           LaurentPoly::monomial(Expo{-1, -1, 0, 0, 0, 0, 0}, 1) + lvar(VS) * lvar(VT);
}

}  // namespace

SymMatrix2 gen_A() {
    return SymMatrix2{lvar(VA), LaurentPoly(), lvar(VT), lvar(VA, -1)};
}

SymMatrix2 gen_A_s() {
    return SymMatrix2{lvar(VA), LaurentPoly(), lvar(VS), lvar(VA, -1)};
}

SymMatrix2 gen_B() {
    return SymMatrix2{lvar(VB), lvar(VS), LaurentPoly(), lvar(VB, -1)};
}

SymMatrix2 b_power_closed(int n) {
    LaurentPoly fn = LaurentPoly::eval_intpoly(fib(n), t_B());
    LaurentPoly fm = LaurentPoly::eval_intpoly(fib(n - 1), t_B());
    SymMatrix2 B = gen_B();
    SymMatrix2 out;
    out.e11 = fn * B.e11 - fm;
    out.e12 = fn * B.e12;
    out.e21 = LaurentPoly();
    out.e22 = fn * B.e22 - fm;
    return out;
}

const SymMatrix2& build_W() {
    static const SymMatrix2 W = [] {
        SymMatrix2 A = gen_A();
        SymMatrix2 Ai = mat_inv_sl2(A);
        SymMatrix2 B = gen_B();
        return Ai * B * A * A * B * Ai;
    }();
    return W;
}

SymMatrix2 build_F(int n) { return b_power_closed(-n) - build_W(); }

ClosedFormEntries closed_F_entries(int n) {
    const LaurentPoly st = lvar(VS) * lvar(VT);
    const LaurentPoly st2 = st * st;
    const LaurentPoly a = lvar(VA), ai = lvar(VA, -1);
    const LaurentPoly b = lvar(VB), bi = lvar(VB, -1);
    const LaurentPoly bn = LaurentPoly::eval_intpoly(fib(n), t_B()) * b -
                           LaurentPoly::eval_intpoly(fib(n - 1), t_B());
    const LaurentPoly bmn = LaurentPoly::eval_intpoly(fib(-n), t_B()) * b -
                            LaurentPoly::eval_intpoly(fib(-n - 1), t_B());

    ClosedFormEntries out;
    out.f11 = bmn - (b * b - st * lvar(VA, -3) * bi - st2 * (lconst(1) + lvar(VA, -2)) +
                     st * (-a + ai + lvar(VA, -3)) * b);
    out.f12 = -(lvar(VS) * LaurentPoly::eval_intpoly(fib(n), t_B())) -
              lvar(VS) * (t_AB() * t_A() - t_B());
    out.f21 = -(lvar(VT) * (t_A() * t_AB() * t_AB() - t_A() * t_A() * t_B() * t_AB() +
                            t_A() * t_A() * t_A() + t_A() * t_B() * t_B() - t_B() * t_AB() -
                            lconst(2) * t_A()));
    out.f22 = bn - (bi * bi - st * b * lvar(VA, 3) - st2 * (lconst(1) + lvar(VA, 2)) -
                    st * (-a + ai - lvar(VA, 3)) * bi);
    return out;
}

LaurentPoly F12_prime(int n) {
    return LaurentPoly::eval_intpoly(fib(n), lvar(VY)) + lvar(VZ) * lvar(VX) - lvar(VY);
}

LaurentPoly F21_prime() {
    const LaurentPoly x = lvar(VX), y = lvar(VY), z = lvar(VZ);
    return x * z * z - x * x * y * z + x * x * x + x * y * y - y * z - lconst(2) * x;
}

LaurentPoly D_prime(int n) {
    const LaurentPoly x = lvar(VX), y = lvar(VY), z = lvar(VZ);
    return LaurentPoly::eval_intpoly(fib(n + 1), y) - LaurentPoly::eval_intpoly(fib(n - 1), y) +
           (x * x * z * z - x * x * x * y * z + x.pow(4) + x * x * y * y - lconst(4) * x * x -
            y * y + lconst(2));
}

namespace {

LaurentPoly halve(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (mpz_odd_p(c.get_mpz_t()))
            throw derivation_mismatch("odd coefficient in the half of D' + y F12' - x F21'");
        out = out + LaurentPoly::monomial(e, c / 2);
    }
    return out;
}

}  // namespace

PhiGenerators phi_generators(int n) {
    const LaurentPoly x = lvar(VX), y = lvar(VY), z = lvar(VZ);
    FactorFamily fam = family(n);

    // direct forms
    PhiGenerators out;
    out.phi1 = x * x - lconst(1) + LaurentPoly::eval_intpoly(fib(n - 1), y);
    out.phi2 = z * x - y + LaurentPoly::eval_intpoly(fib(n), y);
    out.phi3 = x * (LaurentPoly::eval_intpoly(fib(n + 1), y) - lconst(1)) -
               z * LaurentPoly::eval_intpoly(fib(n), y);
    out.phi3p = x * LaurentPoly::eval_intpoly(fam.k, y) - z * LaurentPoly::eval_intpoly(fam.l, y);

    // derived from the relation-matrix generators
    LaurentPoly f12p = F12_prime(n);
    LaurentPoly f21p = F21_prime();
    LaurentPoly dp = D_prime(n);
    LaurentPoly phi1d = y * f12p - halve(dp + y * f12p - x * f21p);
    LaurentPoly phi3d = f21p - (z - x * y) * f12p - x * phi1d;

    if (!(phi1d == out.phi1) || !(f12p == out.phi2) || !(phi3d == out.phi3))
        throw derivation_mismatch("direct and derived phi generators disagree");
    if (!(out.phi3 == LaurentPoly::eval_intpoly(fam.j, y) * out.phi3p))
        throw derivation_mismatch("phi_3 != j_n phi_3'");
    return out;
}

const LaurentPoly& longitude_trace() {
    static const LaurentPoly chi = [] {
        SymMatrix2 A = gen_A_s();
        SymMatrix2 B = gen_B();
        SymMatrix2 Ai = mat_inv_sl2(A);
        SymMatrix2 Bi = mat_inv_sl2(B);
        SymMatrix2 lam = A * B * Ai * B * A * Bi * Ai * Bi;
        return trace_rewrite(lam.trace());
    }();
    return chi;
}

LaurentPoly meridian_trace() {
    SymMatrix2 BA = gen_B() * gen_A_s();
    return trace_rewrite(BA.trace());
}

LaurentPoly spin_image_x(int n) {
    return -(lvar(VZ) * LaurentPoly::eval_intpoly(fib(n), lvar(VY))) +
           lvar(VX) * LaurentPoly::eval_intpoly(fib(n + 1), lvar(VY));
}

bool spin_fixed_identity(int n) {
    LaurentPoly lhs = lvar(VX) - spin_image_x(n);
    LaurentPoly phi3 = lvar(VX) * (LaurentPoly::eval_intpoly(fib(n + 1), lvar(VY)) - lconst(1)) -
                       lvar(VZ) * LaurentPoly::eval_intpoly(fib(n), lvar(VY));
    return lhs == -phi3;
}

double PhiEval::max_abs() const {
    return std::max(std::max(std::abs(phi1), std::abs(phi2)),
                    std::max(std::abs(phi3), std::abs(phi3p)));
}

double PhiEval::max_abs3() const {
    return std::max(std::max(std::abs(phi1), std::abs(phi2)), std::abs(phi3));
}

PhiEval eval_phi(int n, cdouble x, cdouble y, cdouble z) {
    FactorFamily fam = family(n);
    PhiEval out;
    out.phi1 = x * x - 1.0 + fib(n - 1).eval(y);
    out.phi2 = z * x - y + fib(n).eval(y);
    out.phi3 = x * (fib(n + 1).eval(y) - 1.0) - z * fib(n).eval(y);
    out.phi3p = x * fam.k.eval(y) - z * fam.l.eval(y);
    return out;
}

cdouble eval_longitude(cdouble x, cdouble y, cdouble z) {
    cdouble z2 = z * z, z3 = z2 * z, z4 = z2 * z2;
    cdouble x2 = x * x, y2 = y * y;
    return z4 - 2.0 * x * y * z3 + (x2 * y2 + y2 + 2.0 * x2 - 4.0) * z2 +
           (-2.0 * x2 * x * y - y2 * y * x + 4.0 * x * y) * z + x2 * x2 + x2 * y2 - 4.0 * x2 +
           2.0;
}

cdouble eval_reducible(cdouble x, cdouble y, cdouble z) {
    return x * x + y * y + z * z - x * y * z - 4.0;
}

Rep recover(cdouble x, cdouble y, cdouble z, double tol) {
    if (std::abs(x - 2.0) <= tol || std::abs(x + 2.0) <= tol || std::abs(y - 2.0) <= tol ||
        std::abs(y + 2.0) <= tol)
        throw non_generic("parabolic generator trace; no standard-form recovery");
    Rep r;
    r.a = (x + std::sqrt(x * x - 4.0)) / 2.0;
    r.b = (y + std::sqrt(y * y - 4.0)) / 2.0;
    r.s = std::sqrt(z - r.a * r.b - 1.0 / (r.a * r.b));
    return r;
}

namespace {

struct CMat {
    cdouble m[2][2];
};

CMat cmul(const CMat& p, const CMat& q) {
    CMat r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = p.m[i][0] * q.m[0][j] + p.m[i][1] * q.m[1][j];
    return r;
}

}  // namespace

double relation_residual(const Rep& r, int n) {
    CMat A{{{r.a, 0.0}, {r.s, 1.0 / r.a}}};
    CMat B{{{r.b, r.s}, {0.0, 1.0 / r.b}}};
    CMat Ai{{{1.0 / r.a, 0.0}, {-r.s, r.a}}};
    CMat Bi{{{1.0 / r.b, -r.s}, {0.0, r.b}}};

    CMat Bmn{{{1.0, 0.0}, {0.0, 1.0}}};
    for (int i = 0; i < std::abs(n); ++i) Bmn = cmul(Bmn, n > 0 ? Bi : B);
    CMat W = cmul(cmul(cmul(cmul(Ai, B), cmul(A, A)), B), Ai);
    double resid = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) resid = std::max(resid, std::abs(Bmn.m[i][j] - W.m[i][j]));
    return resid;
}

}  // namespace ptb
