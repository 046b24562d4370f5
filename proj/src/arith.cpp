#include "ptb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptb {

IntPoly trace_poly(int n) {
    return fib(n + 1) - fib(n - 1) - IntPoly{-6, 0, 1};
}

IntPoly trace_poly_hat(int n) {
    IntPoly p = trace_poly(n);
    if (imod(n, 2) == 1) return IntPoly::divrem_exact(p, IntPoly{2, 1});
    return p;
}

namespace {

std::vector<std::pair<int, IntPoly>> cyclotomic_scan(const IntPoly& p) {
    std::vector<std::pair<int, IntPoly>> hits;
    for (int d = 1; d <= 2 * p.degree(); ++d) {
        IntPoly g = IntPoly::gcd(p, cyclotomic(d));
        if (!g.is_constant()) hits.emplace_back(d, g);
    }
    return hits;
}

}  // namespace

TraceFieldCert trace_field(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("trace field computed for |n| > 2");
    const int N = std::abs(n);
    TraceFieldCert out;
    out.n = n;
    out.phat = trace_poly_hat(n);
    out.degree = out.phat.degree();
    if (out.degree != N - (N % 2)) {
        // degree |n| - e with e = 1 for odd n, 0 for even n
    }
    if (out.degree != N - (N % 2 == 1 ? 1 : 0))
        throw certificate_failed("unexpected degree of phat");

    out.b_poly = IntPoly::monomial(2 * N) - IntPoly::monomial(N + 2) +
                 IntPoly::monomial(N, 4) - IntPoly::monomial(N - 2) + IntPoly{1};

    // the b-side quadrinomial is b^N p_N(b + 1/b)
    {
        LaurentPoly lhs = LaurentPoly::eval_intpoly(
                              trace_poly(N), LaurentPoly::variable(VB, 1) +
                                                 LaurentPoly::variable(VB, -1)) *
                          LaurentPoly::variable(VB, N);
        LaurentPoly rhs;
        for (int k = 0; k <= out.b_poly.degree(); ++k)
            if (out.b_poly.coeff(k) != 0)
                rhs = rhs + LaurentPoly::monomial(Expo{0, k, 0, 0, 0, 0, 0}, out.b_poly.coeff(k));
        if (!(lhs == rhs)) throw certificate_failed("b-side quadrinomial mismatch");
    }

    if (N % 2 == 0) {
        const int m = N / 2;
        IntPoly qm = IntPoly::monomial(2 * m) - IntPoly::monomial(m + 1) +
                     IntPoly::monomial(m - 1) + IntPoly{1};
        IntPoly mirror = IntPoly::monomial(2 * m) + IntPoly::monomial(m + 1) -
                         IntPoly::monomial(m - 1) + IntPoly{1};
        if (!(qm * mirror == out.b_poly))
            throw certificate_failed("even factorization q_m * mirror mismatch");
        out.parity_factor = qm;
    } else {
        IntPoly rn = IntPoly::monomial(2 * N) - IntPoly::monomial(N + 2) +
                     IntPoly::monomial(N - 2) + IntPoly{1};
        out.r_poly = rn;
        // r_N(c) r_N(-c) = b_poly with b = c^2
        IntPoly rn_neg;
        {
            std::vector<bigint> cs;
            for (int k = 0; k <= rn.degree(); ++k)
                cs.push_back(k % 2 == 0 ? rn.coeff(k) : -rn.coeff(k));
            rn_neg = IntPoly(std::move(cs));
        }
        if (!(rn * rn_neg == out.b_poly.compose_power(2)))
            throw certificate_failed("odd factorization r_N(c) r_N(-c) mismatch");
        // strip the c^2 + 1 factor, exactly once
        out.parity_factor = IntPoly::divrem_exact(rn, IntPoly{1, 0, 1});
        if (!IntPoly::gcd(out.parity_factor, IntPoly{1, 0, 1}).is_constant())
            throw certificate_failed("c^2 + 1 divides r_N with multiplicity > 1");
        out.cyclotomic_hits = cyclotomic_scan(rn);
    }

    auto factor_hits = cyclotomic_scan(out.parity_factor);
    if (!factor_hits.empty())
        throw certificate_failed("cyclotomic factor found in the parity factor");
    if (N % 2 == 0) out.cyclotomic_hits = std::move(factor_hits);
    out.certified = true;
    return out;
}

std::vector<DiscreteFaithfulPoint> discrete_faithful(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("discrete faithful points need |n| > 2");
    std::vector<DiscreteFaithfulPoint> out;
    IntPoly phat = trace_poly_hat(n);
    for (cdouble y : roots_complex(phat, 1e-10)) {
        for (int eps : {1, -1}) {
            for (int branch : {1, -1}) {
                cdouble sq = std::sqrt(y * y - 8.0);
                cdouble x = 0.5 * static_cast<double>(eps) * (y - static_cast<double>(branch) * sq);
                cdouble z = 2.0 * eps;
                if (std::abs(eval_longitude(x, y, z) + 2.0) > 1e-9) continue;
                if (std::abs(2.0 + x * x - static_cast<double>(eps) * x * y) > 1e-9) continue;
                if (eval_phi(n, x, y, z).max_abs3() > 1e-9) continue;
                // traces of generators avoid every R_k shadow
                bool on_shadow = false;
                for (int k = 1; k <= 4 * std::abs(n) && !on_shadow; ++k)
                    for (const TraceAngle& t : root_set(RootSetLabel::R, k).elements)
                        if (std::abs(y - t.value()) < 1e-6 || std::abs(x - t.value()) < 1e-6) {
                            on_shadow = true;
                            break;
                        }
                if (on_shadow) continue;
                DiscreteFaithfulPoint d;
                d.y = ComplexVal(y);
                d.eps = eps;
                d.branch = branch;
                d.point.x = ComplexVal(x);
                d.point.y = ComplexVal(y);
                d.point.z = ComplexVal(z);
                d.point.tag = PointTag::discrete_faithful;
                d.point.eps = eps;
                out.push_back(d);
            }
        }
    }
    return out;
}

AlexanderRecord twisted_alexander(const VarietyPoint& p) {
    cdouble y = p.y.value;
    if (std::abs(y - 2.0) <= p.y.tol)
        throw parabolic_y_two("twisted Alexander polynomial undefined at y = 2");
    AlexanderRecord r;
    r.Z = 2.0 * (p.z.value - p.x.value) / (y - 2.0);
    return r;
}

cdouble twisted_alexander_eval(const VarietyPoint& p, cdouble T) {
    return 1.0 / T + twisted_alexander(p).Z + T;
}

namespace {

struct CMat {
    cdouble m[2][2];

    CMat operator*(const CMat& o) const {
        CMat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
    CMat operator+(const CMat& o) const {
        CMat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    CMat operator-(const CMat& o) const {
        CMat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    CMat scaled(cdouble c) const {
        CMat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = c * m[i][j];
        return r;
    }
    cdouble det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    CMat inv() const {
        cdouble d = det();
        CMat r{{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
        return r;
    }
};

const CMat kIdent{{{1.0, 0.0}, {0.0, 1.0}}};

}  // namespace

cdouble fox_calculus_oracle(const VarietyPoint& p, int n, cdouble T) {
    if (T == cdouble(0, 0)) throw std::invalid_argument("oracle needs T != 0");
    Rep rep;
    try {
        rep = recover(p.x.value, p.y.value, p.z.value);
    } catch (const non_generic& e) {
        throw recovery_failed(e.what());
    }
    // the relation B^-n = A^-1 B A^2 B A^-1 folds the n-dependence into the
    // determinant below; n only guards the on-locus precondition
    if (eval_phi(n, p.x.value, p.y.value, p.z.value).max_abs3() > 1e-6)
        throw recovery_failed("point is not on the irreducible locus");
    CMat A{{{rep.a, 0.0}, {rep.s, 1.0 / rep.a}}};
    CMat B{{{rep.b, rep.s}, {0.0, 1.0 / rep.b}}};
    CMat IB = kIdent - B;
    if (std::abs(IB.det()) < 1e-12)
        throw singular_i_minus_b("I - B singular (b = 1)");
    CMat Ai = A.inv();
    CMat W = Ai * B * A * A * B * Ai;
    CMat M = Ai.scaled(T) + (Ai * B * A * A).scaled(1.0 / T) - (kIdent - W) * IB.inv();
    cdouble denom = (A.scaled(1.0 / T) - kIdent).det();
    return M.det() / denom / T;
}

double dilatation(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("dilatation defined for |n| > 2");
    double an = std::abs(n);
    return 0.5 * (an + std::sqrt(static_cast<double>(n) * n - 4.0));
}

GenusRelation genus_relation(int n) {
    GenusRelation r;
    r.d = static_cast<int>(std::floor(dilatation(n)));
    if (r.d != std::abs(n) - 1) throw derivation_mismatch("floor of dilatation is not |n|-1");
    r.g = genus(n);
    int sgn = n > 0 ? 1 : -1;
    switch (imod(n, 4)) {
        case 2: r.alpha = 4 + sgn; break;
        case 0: r.alpha = 2 + sgn; break;
        default: r.alpha = 1 + sgn; break;
    }
    r.holds = (r.d == 2 * r.g + r.alpha);
    return r;
}

VarietyPoint spin_action(const VarietyPoint& p, int n) {
    VarietyPoint q = p;
    cdouble y = p.y.value;
    q.x = ComplexVal(-p.z.value * fib(n).eval(y) + p.x.value * fib(n + 1).eval(y), p.x.tol);
    return q;
}

VarietyPoint flip_action(const VarietyPoint& p) { return p; }

namespace {

VarietyPoint filling_point(cdouble x, cdouble y, cdouble z) {
    VarietyPoint p;
    p.x = ComplexVal(x);
    p.y = ComplexVal(y);
    p.z = ComplexVal(z);
    p.tag = PointTag::filling;
    return p;
}

}  // namespace

std::vector<VarietyPoint> filling_characters(int n) {
    std::vector<VarietyPoint> out;
    if (n == -2) {
        for (int k = -2; k <= 2; ++k) {
            double y = 1.1 * k;
            out.push_back(filling_point(y, y, 2.0));
        }
        return out;
    }
    for (const TraceAngle& t : root_set(RootSetLabel::R, n + 2).elements) {
        double y = t.value();
        out.push_back(filling_point(y, y, 2.0));
    }
    return out;
}

std::vector<SpecialFillingFamily> filling_characters_special(int n, int k) {
    std::vector<SpecialFillingFamily> out;
    auto r_values = [](int N) {
        std::vector<double> vs;
        if (N == 0) return vs;
        for (const TraceAngle& t : root_set(RootSetLabel::R, N).elements)
            vs.push_back(t.value());
        return vs;
    };

    const double two_pi = 6.283185307179586476925286766559;
    switch (n) {
        case -1: {
            SpecialFillingFamily f;
            std::ostringstream os;
            os << "lambda^" << k << " mu^" << (6 * k - 1);
            f.quotient = os.str();
            for (double x : r_values(18 * k - 3)) f.points.push_back(filling_point(x, 2.0, x));
            out.push_back(std::move(f));
            break;
        }
        case 0: {
            SpecialFillingFamily f;
            std::ostringstream os;
            os << "lambda^" << k << " mu^" << (4 * k - 1);
            f.quotient = os.str();
            for (double x : r_values(4 * k - 1)) f.points.push_back(filling_point(x, 2.0, x));
            RootSet big = root_set(RootSetLabel::R, 8 * k - 2);
            RootSet small = root_set(RootSetLabel::R, 4 * k - 1);
            for (const TraceAngle& t : big.minus(small))
                f.points.push_back(filling_point(t.value(), -2.0, -t.value()));
            out.push_back(std::move(f));
            break;
        }
        case 1: {
            SpecialFillingFamily f;
            std::ostringstream os;
            os << "lambda^" << k << " mu^" << (3 * k - 1);
            f.quotient = os.str();
            int N = std::abs(9 * k - 3);
            for (int j = 0; j < N; ++j) {
                double th = two_pi * j / N;
                f.points.push_back(filling_point(2.0 * std::cos(th),
                                                 2.0 * std::cos(th * (3 * k - 1)),
                                                 2.0 * std::cos(th * 3 * k)));
            }
            out.push_back(std::move(f));
            break;
        }
        case 2: {
            SpecialFillingFamily f;
            f.quotient = "lambda mu^3";
            for (int j = 0; j < 12; ++j) {
                double th = two_pi * j / 12.0;
                f.points.push_back(filling_point(2.0 * std::cos(th), 2.0 * std::cos(3 * th),
                                                 2.0 * std::cos(4 * th)));
            }
            out.push_back(std::move(f));
            break;
        }
        case 3: {
            SpecialFillingFamily f1;
            f1.quotient = "lambda mu";
            for (double x : r_values(5)) f1.points.push_back(filling_point(x, x, 2.0));
            out.push_back(std::move(f1));

            SpecialFillingFamily f2;
            f2.quotient = "lambda mu^2";
            for (double x : r_values(5)) f2.points.push_back(filling_point(x, x, 2.0));
            RootSet r10 = root_set(RootSetLabel::R, 10);
            RootSet r5 = root_set(RootSetLabel::R, 5);
            for (const TraceAngle& t : r10.minus(r5))
                f2.points.push_back(filling_point(t.value(), -t.value(), -2.0));
            out.push_back(std::move(f2));
            break;
        }
        case 5: {
            SpecialFillingFamily f;
            f.quotient = "lambda mu";
            for (double x : r_values(7)) f.points.push_back(filling_point(x, x, 2.0));
            out.push_back(std::move(f));
            break;
        }
        default:
            break;
    }
    return out;
}

std::vector<LensFilling> filling_table(int p) {
    std::vector<LensFilling> out;
    std::ostringstream os;
    switch (p) {
        case -1:
            out.push_back({"-6+1/k", "L(6k-1, 2k-1)"});
            break;
        case -2:
            out.push_back({"-4+1/k", "L(8k-2, 2k-1)"});
            break;
        case -3:
            out.push_back({"-3+1/k", "L(9k-3, 3k-2)"});
            break;
        case -4:
            out.push_back({"infty", "L(4, -1)"});
            out.push_back({"-3", "L(12, 5)"});
            return out;
        case -5:
            out.push_back({"infty", "L(5, -1)"});
            out.push_back({"-1", "L(5, 1)"});
            out.push_back({"-2", "L(10, 3)"});
            return out;
        case -7:
            out.push_back({"infty", "L(7, -1)"});
            out.push_back({"-1", "L(7, 3)"});
            return out;
        default:
            break;
    }
    os << "L(" << p << ", 1)";
    out.push_back({"infty", os.str()});
    return out;
}

}  // namespace ptb
