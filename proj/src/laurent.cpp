#include "ptb/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace ptb {

namespace {
const char* var_name(int v) {
    static const char* names[kNumVars] = {"a", "b", "s", "t", "x", "y", "z"};
    return names[v];
}
bool is_unit_var(int v) { return v == VA || v == VB; }
}  // namespace

void LaurentPoly::add_term(const Expo& e, const bigint& c) {
    if (c == 0) return;
    for (int v = 0; v < kNumVars; ++v)
        if (e[static_cast<size_t>(v)] < 0 && !is_unit_var(v))
            throw std::invalid_argument(std::string("negative exponent on non-unit variable ") +
                                        var_name(v));
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::constant(const bigint& c) {
    LaurentPoly p;
    p.add_term(Expo{}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Var v, int exp) {
    LaurentPoly p;
    Expo e{};
    e[static_cast<size_t>(v)] = exp;
    p.add_term(e, 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Expo& e, const bigint& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

bigint LaurentPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? bigint(0) : it->second;
}

bool LaurentPoly::uses(Var v) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<size_t>(v)] != 0) return true;
    return false;
}

int LaurentPoly::max_exp(Var v) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[static_cast<size_t>(v)]);
    return m;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [ep, cp] : p.terms_) {
        for (const auto& [eq, cq] : q.terms_) {
            Expo e;
            for (int v = 0; v < kNumVars; ++v)
                e[static_cast<size_t>(v)] =
                    ep[static_cast<size_t>(v)] + eq[static_cast<size_t>(v)];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

LaurentPoly operator*(const bigint& c, const LaurentPoly& p) {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::pow needs k >= 0");
    LaurentPoly acc = constant(1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::eval_intpoly(const IntPoly& p, const LaurentPoly& arg) {
    LaurentPoly acc;
    if (p.is_zero()) return acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * arg + constant(p.coeff(k));
    return acc;
}

LaurentPoly LaurentPoly::rename(Var from, Var to) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        f[static_cast<size_t>(to)] += f[static_cast<size_t>(from)];
        f[static_cast<size_t>(from)] = 0;
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::subst(const std::map<Var, LaurentPoly>& bindings) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = constant(c);
        Expo rest = e;
        for (const auto& [v, val] : bindings) {
            int k = rest[static_cast<size_t>(v)];
            if (k < 0) throw std::invalid_argument("polynomial substitution into negative power");
            if (k > 0) term = term * val.pow(k);
            rest[static_cast<size_t>(v)] = 0;
        }
        r = r + term * monomial(rest, 1);
    }
    return r;
}

cdouble LaurentPoly::substitute(const std::map<Var, cdouble>& bindings) const {
    cdouble acc(0, 0);
    for (const auto& [e, c] : terms_) {
        cdouble term(c.get_d(), 0);
        for (int v = 0; v < kNumVars; ++v) {
            int k = e[static_cast<size_t>(v)];
            if (k == 0) continue;
            auto it = bindings.find(static_cast<Var>(v));
            if (it == bindings.end())
                throw unbound_variable(std::string("unbound variable ") + var_name(v));
            cdouble val = it->second;
            if (k < 0 && val == cdouble(0, 0))
                throw zero_unit_value(std::string("zero value for unit variable ") + var_name(v));
            cdouble base = k < 0 ? 1.0 / val : val;
            for (int i = 0; i < std::abs(k); ++i) term *= base;
        }
        acc += term;
    }
    return acc;
}

std::vector<LaurentPoly> LaurentPoly::collect(Var v) const {
    std::vector<LaurentPoly> out;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(v)];
        if (k < 0) throw std::invalid_argument("collect on negative exponent");
        if (static_cast<size_t>(k) >= out.size()) out.resize(static_cast<size_t>(k) + 1);
        Expo f = e;
        f[static_cast<size_t>(v)] = 0;
        out[static_cast<size_t>(k)].add_term(f, c);
    }
    if (out.empty()) out.resize(1);
    return out;
}

IntPoly LaurentPoly::to_intpoly(Var v) const {
    std::vector<bigint> cs;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(v)];
        if (k < 0) throw std::invalid_argument("to_intpoly on negative exponent");
        for (int w = 0; w < kNumVars; ++w)
            if (w != v && e[static_cast<size_t>(w)] != 0)
                throw std::invalid_argument("to_intpoly: polynomial is not univariate");
        if (static_cast<size_t>(k) >= cs.size()) cs.resize(static_cast<size_t>(k) + 1, bigint(0));
        cs[static_cast<size_t>(k)] = c;
    }
    return IntPoly(std::move(cs));
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Expo, bigint>> ts(terms_.begin(), terms_.end());
    auto grade = [](const Expo& e) {
        int g = 0;
        for (int v : e) g += std::abs(v);
        return g;
    };
    std::sort(ts.begin(), ts.end(), [&](const auto& l, const auto& r) {
        int gl = grade(l.first), gr = grade(r.first);
        if (gl != gr) return gl > gr;
        return l.first > r.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        bigint a = c < 0 ? bigint(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any = false;
        std::ostringstream mono;
        for (int v = 0; v < kNumVars; ++v) {
            int k = e[static_cast<size_t>(v)];
            if (k == 0) continue;
            if (any) mono << " ";
            mono << var_name(v);
            if (k != 1) mono << "^" << k;
            any = true;
        }
        if (!any || a != 1) {
            os << a.get_str();
            if (any) os << " ";
        }
        os << mono.str();
    }
    return os.str();
}

SymMatrix2 SymMatrix2::identity() {
    SymMatrix2 m;
    m.e11 = LaurentPoly::constant(1);
    m.e22 = LaurentPoly::constant(1);
    return m;
}

LaurentPoly SymMatrix2::det() const { return e11 * e22 - e12 * e21; }

SymMatrix2 operator*(const SymMatrix2& m, const SymMatrix2& n) {
    SymMatrix2 r;
    r.e11 = m.e11 * n.e11 + m.e12 * n.e21;
    r.e12 = m.e11 * n.e12 + m.e12 * n.e22;
    r.e21 = m.e21 * n.e11 + m.e22 * n.e21;
    r.e22 = m.e21 * n.e12 + m.e22 * n.e22;
    return r;
}

SymMatrix2 operator-(const SymMatrix2& m, const SymMatrix2& n) {
    return SymMatrix2{m.e11 - n.e11, m.e12 - n.e12, m.e21 - n.e21, m.e22 - n.e22};
}

SymMatrix2 mat_mul(const SymMatrix2& m, const SymMatrix2& n) { return m * n; }

SymMatrix2 mat_inv_sl2(const SymMatrix2& m) {
    if (!(m.det() == LaurentPoly::constant(1))) throw non_unit_determinant();
    return SymMatrix2{m.e22, -m.e12, -m.e21, m.e11};
}

SymMatrix2 mat_pow(const SymMatrix2& m, int k) {
    SymMatrix2 base = k < 0 ? mat_inv_sl2(m) : m;
    int n = std::abs(k);
    SymMatrix2 acc = SymMatrix2::identity();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

namespace {

// rewrite f in Z[a^{+-1}, b^{+-1}] as a polynomial in x = a+1/a, y = b+1/b
// by corner elimination on the lex-maximal (a-exponent, b-exponent)
LaurentPoly rewrite_ab(LaurentPoly f) {
    const LaurentPoly xa =
        LaurentPoly::variable(VA, 1) + LaurentPoly::variable(VA, -1);
    const LaurentPoly yb =
        LaurentPoly::variable(VB, 1) + LaurentPoly::variable(VB, -1);
    LaurentPoly out;
    while (!f.is_zero()) {
        int I = std::numeric_limits<int>::min();
        for (const auto& [e, c] : f.terms()) I = std::max(I, e[VA]);
        int J = std::numeric_limits<int>::min();
        bigint coef(0);
        for (const auto& [e, c] : f.terms()) {
            if (e[VA] != I) continue;
            if (e[VB] > J) {
                J = e[VB];
                coef = c;
            }
        }
        if (I < 0 || J < 0)
            throw not_trace_expressible("coefficient is not symmetric under inversion");
        Expo em{};
        em[VX] = I;
        em[VY] = J;
        out = out + LaurentPoly::monomial(em, coef);
        f = f - coef * (xa.pow(I) * yb.pow(J));
    }
    return out;
}

}  // namespace

LaurentPoly trace_rewrite(const LaurentPoly& p) {
    if (p.uses(VX) || p.uses(VY) || p.uses(VZ))
        throw not_trace_expressible("input already mentions trace coordinates");
    LaurentPoly q = p.rename(VT, VS);

    // split by even powers of s
    std::vector<LaurentPoly> by_s = q.collect(VS);
    std::vector<LaurentPoly> c;  // coefficient of (s^2)^k
    for (size_t k = 0; k < by_s.size(); ++k) {
        if (!by_s[k].is_zero() && k % 2 == 1)
            throw not_trace_expressible("odd power of s after pairing s = t");
        if (k % 2 == 0) c.push_back(by_s[k]);
    }

    const LaurentPoly w = LaurentPoly::monomial(Expo{1, 1, 0, 0, 0, 0, 0}, 1) +
                          LaurentPoly::monomial(Expo{-1, -1, 0, 0, 0, 0, 0}, 1);

    // peel z-degrees from the top: c_j = sum_{q>=j} C(q,j) Q_q w^{q-j};
    // the subtraction stays in a,b form, the rewrite produces the x,y form
    const int K = static_cast<int>(c.size()) - 1;
    std::vector<LaurentPoly> Qab(static_cast<size_t>(K) + 1);
    std::vector<LaurentPoly> Qxy(static_cast<size_t>(K) + 1);
    for (int j = K; j >= 0; --j) {
        LaurentPoly acc = c[static_cast<size_t>(j)];
        for (int k = j + 1; k <= K; ++k) {
            bigint binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            acc = acc - binom * (Qab[static_cast<size_t>(k)] * w.pow(k - j));
        }
        Qab[static_cast<size_t>(j)] = acc;
        Qxy[static_cast<size_t>(j)] = rewrite_ab(acc);
    }

    LaurentPoly result;
    for (int j = 0; j <= K; ++j)
        result = result + Qxy[static_cast<size_t>(j)] *
                              LaurentPoly::variable(VZ, 1).pow(j);

    // round-trip check
    std::map<Var, LaurentPoly> back{
        {VX, LaurentPoly::variable(VA, 1) + LaurentPoly::variable(VA, -1)},
        {VY, LaurentPoly::variable(VB, 1) + LaurentPoly::variable(VB, -1)},
        {VZ, w + LaurentPoly::variable(VS, 1) * LaurentPoly::variable(VS, 1)},
    };
    if (!(result.subst(back) == q))
        throw not_trace_expressible("back-substitution mismatch");
    return result;
}

}  // namespace ptb
