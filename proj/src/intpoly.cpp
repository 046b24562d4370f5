#include "ptb/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace ptb {

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<bigint> r(std::max(p.c_.size(), q.c_.size()), bigint(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<bigint> r(std::max(p.c_.size(), q.c_.size()), bigint(0));
    for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p) {
    std::vector<bigint> r(p.c_);
    for (auto& c : r) c = -c;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly();
    std::vector<bigint> r(p.c_.size() + q.c_.size() - 1, bigint(0));
    for (size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const bigint& c, const IntPoly& p) {
    if (c == 0) return IntPoly();
    std::vector<bigint> r(p.c_);
    for (auto& x : r) x *= c;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<bigint> r(static_cast<size_t>(k), bigint(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divrem_exact(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw nonzero_remainder("division by zero polynomial");
    if (p.is_zero()) return IntPoly();
    if (p.degree() < d.degree()) throw nonzero_remainder("degree obstruction in exact division");
    std::vector<bigint> rem = p.c_;
    std::vector<bigint> quo(rem.size() - d.c_.size() + 1, bigint(0));
    const bigint& lead = d.c_.back();
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        bigint& top = rem[static_cast<size_t>(k) + d.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw nonzero_remainder("quotient is not integral");
        bigint q = top / lead;
        quo[static_cast<size_t>(k)] = q;
        for (size_t i = 0; i < d.c_.size(); ++i) rem[static_cast<size_t>(k) + i] -= q * d.c_[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw nonzero_remainder("exact division left a remainder");
    return IntPoly(std::move(quo));
}

bigint IntPoly::content() const {
    bigint g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (!c_.empty() && c_.back() < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    bigint g = content();
    std::vector<bigint> r(c_);
    for (auto& c : r) c /= g;
    return IntPoly(std::move(r));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  reduced mod b; both nonzero, deg a >= deg b
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const bigint& lb = b.leading();
    int e = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        IntPoly t = (a.leading() * b).shifted(a.degree() - db);
        a = lb * a - t;
        --e;
    }
    bigint f(1);
    for (; e > 0; --e) f *= lb;
    return f * a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw both_zero();
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    IntPoly a = p.primitive_part();
    IntPoly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);

    // subresultant PRS (Brown); a, b primitive at entry
    bigint g(1), h(1);
    while (true) {
        if (b.is_zero()) return a.primitive_part();
        if (b.degree() == 0) return IntPoly::constant(1);
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        a = b;
        if (!r.is_zero()) {
            bigint div = g;
            for (int i = 0; i < delta; ++i) div *= h;
            std::vector<bigint> rc(r.coeffs());
            for (auto& c : rc) {
                if (!mpz_divisible_p(c.get_mpz_t(), div.get_mpz_t()))
                    throw nonzero_remainder("subresultant PRS internal division failed");
                c /= div;
            }
            b = IntPoly(std::move(rc));
        } else {
            b = IntPoly();
        }
        g = a.leading();
        if (delta > 0) {
            bigint gnum(1);
            for (int i = 0; i < delta; ++i) gnum *= g;
            bigint hden(1);
            for (int i = 0; i < delta - 1; ++i) hden *= h;
            h = gnum / hden;
        }
    }
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<bigint> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = bigint(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(r));
}

bool IntPoly::is_squarefree() const {
    if (is_zero()) throw zero_polynomial("squarefreeness of zero polynomial is undefined");
    if (degree() == 0) return true;
    return gcd(*this, derivative()).is_constant();
}

cdouble IntPoly::eval(cdouble v) const {
    // Horner in extended precision; coefficients of every family polynomial in
    // range fit a double exactly
    std::complex<long double> acc(0.0L, 0.0L);
    std::complex<long double> w(v.real(), v.imag());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * w + static_cast<long double>(it->get_d());
    return cdouble(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

bigint IntPoly::eval_int(const bigint& v) const {
    bigint acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

IntPoly IntPoly::compose_power(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<bigint> r(static_cast<size_t>(degree()) * k + 1, bigint(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::even_powers() const {
    std::vector<bigint> r;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i % 2 == 1) {
            if (c_[i] != 0)
                throw std::invalid_argument("even_powers on a polynomial with odd terms");
        } else {
            r.push_back(c_[i]);
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<bigint> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

double IntPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : c_) m = std::max(m, std::abs(c.get_d()));
    return m;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const bigint& c = coeff(k);
        if (c == 0) continue;
        bigint a = c < 0 ? bigint(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string IntPoly::to_json_array() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << '"' << c_[i].get_str() << '"';
    }
    os << "]";
    return os.str();
}

IntPoly IntPoly::from_json_array(const std::string& text) {
    std::vector<bigint> cs;
    std::string cur;
    bool in_str = false;
    for (char ch : text) {
        if (ch == '"') {
            if (in_str) {
                cs.emplace_back(cur);
                cur.clear();
            }
            in_str = !in_str;
        } else if (in_str) {
            cur.push_back(ch);
        }
    }
    return IntPoly(std::move(cs));
}

std::vector<cdouble> roots_complex(const IntPoly& p, double tol, int max_iter) {
    if (p.is_zero() || p.degree() < 1)
        throw zero_polynomial("root finding needs degree >= 1");

    // strip roots at the origin first
    std::vector<cdouble> out;
    size_t low = 0;
    while (p.coeff(static_cast<int>(low)) == 0) ++low;
    std::vector<double> c;
    for (int k = static_cast<int>(low); k <= p.degree(); ++k) c.push_back(p.coeff(k).get_d());
    for (size_t i = 0; i < low; ++i) out.emplace_back(0.0, 0.0);

    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return out;

    // scale down to avoid overflow in residuals
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::abs(v));
    for (double& v : c) v /= scale;

    std::vector<double> dc(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) dc[static_cast<size_t>(k) - 1] = k * c[static_cast<size_t>(k)];

    auto horner = [](const std::vector<double>& a, cdouble v) {
        cdouble acc(0, 0);
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * v + *it;
        return acc;
    };

    // Cauchy bound radius, deterministic angular offset
    double r = 0.0;
    for (int k = 0; k < n; ++k)
        r = std::max(r, std::abs(c[static_cast<size_t>(k)] / c[static_cast<size_t>(n)]));
    r = 1.0 + r;
    std::vector<cdouble> z(static_cast<size_t>(n));
    const double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < n; ++k) {
        double th = two_pi * k / n + 0.4;
        z[static_cast<size_t>(k)] = r * cdouble(std::cos(th), std::sin(th));
    }

    std::vector<double> absc;
    for (int k = static_cast<int>(low); k <= p.degree(); ++k)
        absc.push_back(std::abs(p.coeff(k).get_d()));
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (int k = 0; k < n; ++k) {
            cdouble zk = z[static_cast<size_t>(k)];
            cdouble pv = horner(c, zk);
            if (std::abs(pv) == 0.0) continue;
            cdouble dv = horner(dc, zk);
            cdouble newton = (dv == cdouble(0, 0)) ? cdouble(0.5, 0.5) : pv / dv;
            cdouble sum(0, 0);
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (zk - z[static_cast<size_t>(j)]);
            cdouble corr = newton / (1.0 - newton * sum);
            z[static_cast<size_t>(k)] = zk - corr;
            if (std::abs(corr) > 1e-14 * (1.0 + std::abs(zk))) converged = false;
        }
    }

    // Newton polish in extended precision (no-op on multiple roots, where the
    // step degenerates; those stay at Aberth accuracy)
    using ldouble = long double;
    using lcomplex = std::complex<ldouble>;
    std::vector<ldouble> lc(c.size()), ldc(dc.size());
    for (size_t i = 0; i < c.size(); ++i) lc[i] = static_cast<ldouble>(c[i]);
    for (size_t i = 0; i < dc.size(); ++i) ldc[i] = static_cast<ldouble>(dc[i]);
    auto lhorner = [](const std::vector<ldouble>& a, lcomplex v) {
        lcomplex acc(0, 0);
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * v + *it;
        return acc;
    };
    for (auto& zk : z) {
        lcomplex w(zk.real(), zk.imag());
        for (int it = 0; it < 4; ++it) {
            lcomplex pv = lhorner(lc, w);
            lcomplex dv = lhorner(ldc, w);
            if (std::abs(dv) <= 4 * std::abs(pv)) break;
            w -= pv / dv;
        }
        zk = cdouble(static_cast<double>(w.real()), static_cast<double>(w.imag()));
    }

    for (int k = 0; k < n; ++k) {
        cdouble zk = z[static_cast<size_t>(k)];
        // evaluation-magnitude scale at this root
        double mag = 0.0, zp = 1.0;
        for (double ac : absc) {
            mag += ac * zp;
            zp *= std::abs(zk);
        }
        if (std::abs(p.eval(zk)) > tol * (1.0 + mag))
            throw non_convergence("Aberth iteration did not reach the residual target");
    }

    // deterministic output order: by (re, im)
    std::sort(z.begin(), z.end(), [](cdouble u, cdouble v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

IntPoly cyclotomic(int d) {
    static std::map<int, IntPoly> memo;
    static std::mutex mu;
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(d);
        if (it != memo.end()) return it->second;
    }
    IntPoly num = IntPoly::monomial(d) - IntPoly::constant(1);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) num = IntPoly::divrem_exact(num, cyclotomic(e));
    {
        std::lock_guard<std::mutex> lk(mu);
        memo.emplace(d, num);
    }
    return num;
}

}  // namespace ptb
