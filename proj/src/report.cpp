#include "ptb/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptb {

namespace {

ordered_json json_complex(const ComplexVal& v) {
    return ordered_json{{"re", v.re()}, {"im", v.im()}, {"tol", v.tol}};
}

ordered_json json_point(const VarietyPoint& p) {
    ordered_json j;
    j["tag"] = tag_name(p.tag);
    if (p.eps != 0) j["eps"] = p.eps;
    j["x"] = json_complex(p.x);
    j["y"] = json_complex(p.y);
    j["z"] = json_complex(p.z);
    return j;
}

ordered_json json_poly(const IntPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

ordered_json json_component(const ComponentDescriptor& c) {
    ordered_json j;
    j["kind"] = kind_name(c.kind);
    j["label"] = c.label;
    if (c.y_fiber) {
        j["y_fiber"] = ordered_json{{"num", c.y_fiber->num},
                                    {"den", c.y_fiber->den},
                                    {"value", c.y_fiber->value()}};
    }
    if (c.line_sign != 0) j["line_sign"] = c.line_sign;
    if (c.model) j["model"] = json_poly(*c.model);
    return j;
}

template <typename Fn>
void section(ordered_json& root, const std::string& name, Fn&& fn) {
    try {
        root[name] = fn();
    } catch (const std::exception& e) {
        root[name] = ordered_json{{"skipped", e.what()}};
    }
}

}  // namespace

ordered_json bundle_report(int n, double tol, int k_lo, int k_hi) {
    ordered_json root;
    root["n"] = n;
    const bool hyp = std::abs(n) > 2;
    root["hyperbolic"] = hyp;
    root["tol"] = tol;

    if (hyp) {
        section(root, "genus", [&] { return genus(n); });
        section(root, "hyperelliptic_model", [&] {
            ordered_json j;
            j["rhs"] = json_poly(hyperelliptic_model(n));
            j["note"] = "w^2 = rhs(y)";
            j["squarefree"] = hyperelliptic_model(n).is_squarefree();
            return j;
        });
        section(root, "canonical_component", [&] { return json_component(canonical_component(n)); });
    } else {
        section(root, "nonhyperbolic_components", [&] {
            ordered_json arr = ordered_json::array();
            for (const auto& c : nonhyperbolic_table(n)) arr.push_back(json_component(c));
            return arr;
        });
    }

    section(root, "reducible_components", [&] {
        ordered_json arr = ordered_json::array();
        for (const auto& c : reducible_components(n)) arr.push_back(json_component(c));
        return arr;
    });

    section(root, "extra_line", [&]() -> ordered_json {
        auto line = extra_line(n);
        if (!line) return ordered_json{{"present", false}};
        ordered_json j;
        j["present"] = true;
        j["component"] = json_component(*line);
        if (std::abs(n) > 2) {
            auto [p, q] = extra_line_meets_canonical(n);
            j["z0"] = json_complex(p.z);
            j["meets_canonical"] = ordered_json::array({json_point(p), json_point(q)});
        }
        return j;
    });

    section(root, "multiplicity_points", [&] {
        ordered_json arr = ordered_json::array();
        for (const auto& p : multiplicity_points(n)) arr.push_back(json_point(p));
        return arr;
    });

    section(root, "intersection_lattice", [&] {
        ordered_json arr = ordered_json::array();
        for (const auto& p : intersection_lattice(n)) arr.push_back(json_point(p));
        return arr;
    });

    if (hyp) {
        section(root, "trace_field", [&] {
            TraceFieldCert c = trace_field(n);
            ordered_json j;
            j["phat"] = json_poly(c.phat);
            j["degree"] = c.degree;
            j["b_poly"] = json_poly(c.b_poly);
            j["parity_factor"] = json_poly(c.parity_factor);
            if (!c.r_poly.is_zero()) j["r_poly"] = json_poly(c.r_poly);
            ordered_json hits = ordered_json::array();
            for (const auto& [d, g] : c.cyclotomic_hits)
                hits.push_back(ordered_json{{"d", d}, {"gcd", json_poly(g)}});
            j["cyclotomic_hits"] = hits;
            j["certified"] = c.certified;
            return j;
        });

        section(root, "discrete_faithful", [&] {
            ordered_json arr = ordered_json::array();
            for (const auto& d : discrete_faithful(n)) {
                ordered_json j;
                j["y"] = json_complex(d.y);
                j["eps"] = d.eps;
                j["branch"] = d.branch;
                j["point"] = json_point(d.point);
                AlexanderRecord a = twisted_alexander(d.point);
                j["Z"] = json_complex(ComplexVal(a.Z, tol));
                arr.push_back(j);
            }
            return arr;
        });

        section(root, "dilatation", [&] {
            GenusRelation r = genus_relation(n);
            ordered_json j;
            j["value"] = dilatation(n);
            j["d"] = r.d;
            j["g"] = r.g;
            j["alpha"] = r.alpha;
            j["d_equals_2g_plus_alpha"] = r.holds;
            return j;
        });

        section(root, "psl_quotient", [&] {
            PslQuotient q = psl_quotient(n);
            ordered_json j;
            j["description"] = q.description;
            j["quotient_model"] = json_poly(q.quotient_model);
            if (imod(n, 2) == 0) {
                ordered_json pts = ordered_json::array();
                for (const auto& p : q.nonlift_points) {
                    ordered_json pj;
                    pj["family"] = p.x_is_sqrt2 ? "(2, ybar, ybar/2)" : "(0, ybar, 0)";
                    pj["y_lift"] = ordered_json{{"num", p.y_lift.num}, {"den", p.y_lift.den}};
                    pj["xbar"] = p.xbar.real();
                    pj["ybar"] = p.ybar.real();
                    pj["zbar"] = p.zbar.real();
                    pts.push_back(pj);
                }
                j["nonlift_points"] = pts;
                if (q.nonlift_line_q) {
                    j["nonlift_line"] =
                        ordered_json{{"q1", json_poly((*q.nonlift_line_q)[0])},
                                     {"q2", json_poly((*q.nonlift_line_q)[1])},
                                     {"q3", json_poly((*q.nonlift_line_q)[2])}};
                }
                j["nonlift_00zbar_line"] = q.nonlift_00z_line;
            }
            return j;
        });
    }

    section(root, "filling_characters", [&] {
        ordered_json j;
        ordered_json arr = ordered_json::array();
        for (const auto& p : filling_characters(n)) arr.push_back(json_point(p));
        j["mu_quotient"] = arr;
        ordered_json fams = ordered_json::array();
        const bool k_independent = (n == 2 || n == 3 || n == 5);
        for (int k = k_independent ? 1 : k_lo; k <= (k_independent ? 1 : k_hi); ++k) {
            for (const auto& fam : filling_characters_special(n, k)) {
                ordered_json fj;
                fj["quotient"] = fam.quotient;
                if (!k_independent) fj["k"] = k;
                ordered_json pts = ordered_json::array();
                for (const auto& p : fam.points) pts.push_back(json_point(p));
                fj["points"] = pts;
                fams.push_back(fj);
            }
        }
        j["special_families"] = fams;
        ordered_json lens = ordered_json::array();
        for (const auto& l : filling_table(-(n + 2)))
            lens.push_back(ordered_json{{"slope", l.slope}, {"lens", l.lens}});
        j["lens_table"] = lens;
        return j;
    });

    section(root, "suite_outcomes", [&] {
        return verify_results_json(run_verify(n, n, all_suites()));
    });

    return root;
}

std::string point_cloud_csv(int n) {
    std::ostringstream os;
    os << "tag,x_re,x_im,y_re,y_im,z_re,z_im\n";
    os.precision(17);
    auto emit = [&](const VarietyPoint& p) {
        os << tag_name(p.tag) << "," << p.x.re() << "," << p.x.im() << "," << p.y.re() << ","
           << p.y.im() << "," << p.z.re() << "," << p.z.im() << "\n";
    };
    if (std::abs(n) > 2) {
        for (const auto& p : multiplicity_points(n)) emit(p);
        if (n != -2)
            for (const auto& p : intersection_lattice(n)) emit(p);
        for (const auto& d : discrete_faithful(n)) emit(d.point);
        if (imod(n, 4) == 2) {
            auto [p, q] = extra_line_meets_canonical(n);
            emit(p);
            emit(q);
        }
    }
    for (const auto& p : filling_characters(n)) emit(p);
    return os.str();
}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{
        "identities", "gcd-table", "separability", "F-entries", "phi-derivation",
        "membership", "oracle",    "psl",          "relation"};
    return names;
}

namespace {

struct Checker {
    SuiteResult& r;
    void operator()(bool ok, const std::string& what) {
        ++r.checks;
        if (!ok) {
            ++r.failures;
            if (r.messages.size() < 20) r.messages.push_back(what);
        }
    }
};

std::string at_n(const std::string& what, int n) {
    std::ostringstream os;
    os << what << " at n = " << n;
    return os.str();
}

void suite_identities(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = lo; n <= hi; ++n) check(identity_suite(n).all(), at_n("identity suite", n));
}

void suite_gcd_table(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = lo; n <= hi; ++n)
        check(gcd_classification(n).all(), at_n("gcd classification", n));
}

void suite_separability(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = lo; n <= hi; ++n) {
        // f_0 = 0 is the only degenerate member of the four families
        if (n != 0) check(fib(n).is_squarefree(), at_n("f_n separable", n));
        check((fib(n + 2) - fib(n)).is_squarefree(), at_n("f_{n+2}-f_n separable", n));
        check((fib(n + 1) - fib(n)).is_squarefree(), at_n("f_{n+1}-f_n separable", n));
        check((fib(n + 1) + fib(n)).is_squarefree(), at_n("f_{n+1}+f_n separable", n));
        if (std::abs(n) > 2)
            check(hyperelliptic_model(n).is_squarefree(), at_n("-h_hat l_hat squarefree", n));
    }
}

void suite_F_entries(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = std::max(lo, -8); n <= std::min(hi, 8); ++n) {
        SymMatrix2 F = build_F(n);
        ClosedFormEntries P = closed_F_entries(n);
        check(F.e11 == P.f11 && F.e12 == P.f12 && F.e21 == P.f21 && F.e22 == P.f22,
              at_n("F-entry concordance", n));
    }
}

void suite_phi_derivation(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = lo; n <= hi; ++n) {
        try {
            phi_generators(n);
            check(true, "");
        } catch (const std::exception&) {
            check(false, at_n("phi derivation", n));
        }
    }
}

void suite_membership(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    // the 1e-9 membership tolerances are double-precision statements for
    // |n| <= 20; conditioning of f_n near y = +-2 grows like (1+sqrt2)^n
    lo = std::max(lo, -20);
    hi = std::min(hi, 20);
    for (int n = lo; n <= hi; ++n) {
        if (std::abs(n) <= 2) {
            for (const auto& c : nonhyperbolic_table(n))
                check(component_residual(c, n, 20) <= 1e-10,
                      at_n("table component " + c.label, n));
            continue;
        }
        for (const auto& p : multiplicity_points(n))
            check(point_residual(p, n) <= 1e-9, at_n("multiplicity point", n));
        check(multiplicity_points(n).size() ==
                  2 * static_cast<size_t>(family(n).j.degree()),
              at_n("multiplicity count", n));
        for (const auto& p : multiplicity_points(n))
            check(std::abs(eval_reducible(p.x.value, p.y.value, p.z.value)) >= 1e-3,
                  at_n("multiplicity point off the reducible locus", n));
        for (const auto& p : intersection_lattice(n))
            check(point_residual(p, n) <= 1e-9, at_n("intersection point", n));
        if (imod(n, 4) == 2) {
            auto [p, q] = extra_line_meets_canonical(n);
            double z0sq = 4.0 * (0.5 - 1.0 / n);
            check(std::abs(p.z.value * p.z.value - z0sq) <= 1e-12, at_n("z0^2", n));
            check(point_residual(q, n) <= 1e-9, at_n("extra-line meet", n));
        }
        // canonical parametrization residuals on a y sweep
        for (int k = 0; k < 25; ++k) {
            double th = 0.11 + 2.9 * k / 25.0;
            cdouble y = 2.0 * std::cos(cdouble(th, 0.07 * std::sin(3 * th)));
            try {
                VarietyPoint p = canonical_param(n, ComplexVal(y), k % 2 ? 1 : -1);
                check(point_residual(p, n) <= 1e-9, at_n("canonical_param residual", n));
            } catch (const on_excluded_fiber&) {
            }
        }
    }
}

void suite_oracle(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    const cdouble Ts[5] = {2.0, 1.0, -1.0, cdouble(0.5, 0.3), cdouble(-0.7, 1.1)};
    for (int n = std::max(lo, -7); n <= std::min(hi, 7); ++n) {
        if (std::abs(n) <= 2) continue;
        int hit = 0;
        for (int k = 0; k < 60 && hit < 20; ++k) {
            double th = 0.13 + 2.8 * k / 60.0;
            cdouble y = 2.0 * std::cos(cdouble(th, 0.05 + 0.04 * std::sin(5 * th)));
            VarietyPoint p;
            try {
                p = canonical_param(n, ComplexVal(y), k % 2 ? 1 : -1);
            } catch (const on_excluded_fiber&) {
                continue;
            }
            if (std::abs(p.y.value - 2.0) < 1e-3) continue;
            ++hit;
            for (const cdouble& T : Ts) {
                try {
                    cdouble lhs = fox_calculus_oracle(p, n, T);
                    cdouble rhs = twisted_alexander_eval(p, T);
                    check(std::abs(lhs - rhs) <= 1e-8, at_n("oracle vs closed form", n));
                } catch (const recovery_failed&) {
                } catch (const singular_i_minus_b&) {
                }
            }
        }
        check(hit >= 20, at_n("oracle sample count", n));
    }
}

void suite_psl(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    lo = std::max(lo, -20);
    hi = std::min(hi, 20);
    for (int n = lo; n <= hi; ++n) {
        if (std::abs(n) <= 2) continue;
        PslQuotient q = psl_quotient(n);
        if (imod(n, 2) == 1) {
            check(q.quotient_model == hyperelliptic_model(n), at_n("odd psl model", n));
            continue;
        }
        // listed points satisfy the eps = -1 system at a lift
        for (const auto& p : q.nonlift_points) {
            double y = p.y_lift.value();
            cdouble x = p.x_is_sqrt2 ? std::sqrt(2.0) : 0.0;
            cdouble z = p.x_is_sqrt2 ? y / std::sqrt(2.0) : 0.0;
            double res = std::max({std::abs(fib(n - 1).eval(y) - (x * x - 1.0)),
                                   std::abs(fib(n).eval(y) - (x * z - y)),
                                   std::abs(x * (fib(n + 1).eval(y) + 1.0) - z * fib(n).eval(y))});
            check(res <= 1e-9, at_n("psl nonlift point", n));
        }
        // parametric line: 50 samples of the eps = -1 system
        check(q.nonlift_line_q.has_value(), at_n("psl line present", n));
        int ok_samples = 0;
        for (int k = 0; k < 50; ++k) {
            cdouble u = 1.9 * std::cos(cdouble(0.07 + 3.0 * k / 50.0, 0.05));
            cdouble x2 = fib(n - 1).eval(u) + 1.0;
            cdouble x = std::sqrt(x2);
            if (std::abs(x) < 1e-6) continue;
            cdouble z = (fib(n).eval(u) + u) / x;
            double res = std::max({std::abs(fib(n - 1).eval(u) - (x * x - 1.0)),
                                   std::abs(fib(n).eval(u) - (x * z - u)),
                                   std::abs(x * (fib(n + 1).eval(u) + 1.0) - z * fib(n).eval(u))});
            check(res <= 1e-9, at_n("psl line sample", n));
            // squared coordinates agree with (q1, ybar, q2/q3)
            const auto& [q1, q2, q3] = *q.nonlift_line_q;
            cdouble ybar = u * u;
            double scale = 1.0 + std::abs(z * z) + std::abs(x * x);
            double agree = std::max(std::abs(q1.eval(ybar) - x * x),
                                    std::abs(q2.eval(ybar) / q3.eval(ybar) - z * z));
            check(agree <= 1e-7 * scale, at_n("psl line q-param", n));
            ++ok_samples;
        }
        check(ok_samples >= 45, at_n("psl line sample count", n));
        check(q.nonlift_00z_line == (imod(n, 4) == 0), at_n("psl 00zbar line flag", n));
    }
}

void suite_relation(SuiteResult& r, int lo, int hi) {
    Checker check{r};
    for (int n = lo; n <= hi; ++n) {
        if (std::abs(n) <= 2) continue;
        GenusRelation rel = genus_relation(n);
        check(rel.holds, at_n("d = 2g + alpha", n));
        check(std::abs(dilatation(n) - 0.5 * (std::abs(n) + std::sqrt(1.0 * n * n - 4))) <=
                  1e-12,
              at_n("dilatation value", n));
    }
}

}  // namespace

std::vector<SuiteResult> run_verify(int lo, int hi, const std::vector<std::string>& suites) {
    std::vector<SuiteResult> out;
    for (const std::string& name : suites) {
        SuiteResult r;
        r.name = name;
        try {
            if (name == "identities") suite_identities(r, lo, hi);
            else if (name == "gcd-table") suite_gcd_table(r, lo, hi);
            else if (name == "separability") suite_separability(r, lo, hi);
            else if (name == "F-entries") suite_F_entries(r, lo, hi);
            else if (name == "phi-derivation") suite_phi_derivation(r, lo, hi);
            else if (name == "membership") suite_membership(r, lo, hi);
            else if (name == "oracle") suite_oracle(r, lo, hi);
            else if (name == "psl") suite_psl(r, lo, hi);
            else if (name == "relation") suite_relation(r, lo, hi);
            else {
                r.failures = 1;
                r.messages.push_back("unknown suite");
            }
        } catch (const std::exception& e) {
            ++r.failures;
            r.messages.push_back(std::string("exception: ") + e.what());
        }
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json verify_results_json(const std::vector<SuiteResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json j;
        j["suite"] = r.name;
        j["checks"] = r.checks;
        j["failures"] = r.failures;
        j["messages"] = r.messages;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace ptb
