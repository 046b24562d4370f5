#include "ptb/variety.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ptb {

const char* tag_name(PointTag t) {
    switch (t) {
        case PointTag::canonical: return "canonical";
        case PointTag::extra_line: return "extra-line";
        case PointTag::reducible: return "reducible";
        case PointTag::multiplicity: return "multiplicity";
        case PointTag::intersection: return "intersection";
        case PointTag::discrete_faithful: return "discrete-faithful";
        case PointTag::filling: return "filling";
        case PointTag::psl_nonlift: return "psl-nonlift";
    }
    return "?";
}

const char* kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::reducible_conic: return "reducible-conic";
        case ComponentKind::reducible_line: return "reducible-line";
        case ComponentKind::reducible_surface: return "reducible-surface";
        case ComponentKind::canonical: return "canonical";
        case ComponentKind::extra_line: return "extra-line";
        case ComponentKind::psl_line: return "psl-line";
        case ComponentKind::psl_point: return "psl-point";
        case ComponentKind::nonhyp_component: return "nonhyp-component";
    }
    return "?";
}

namespace {

ComponentDescriptor reducible_fiber_component(const TraceAngle& t) {
    ComponentDescriptor c;
    c.y_fiber = t;
    const double y = t.value();
    if (t.is_two() || t.is_minus_two()) {
        c.kind = ComponentKind::reducible_line;
        c.line_sign = t.is_two() ? 1 : -1;
        int sgn = c.line_sign;
        c.label = sgn > 0 ? "{(x, 2, x)}" : "{(x, -2, -x)}";
        c.sample = [y, sgn](double s) {
            double x = 3.0 * std::sin(s);
            return std::array<cdouble, 3>{x, y, sgn * x};
        };
    } else {
        c.kind = ComponentKind::reducible_conic;
        std::ostringstream os;
        os << "conic x^2+y^2+z^2-xyz=4 on the fiber y = " << y;
        c.label = os.str();
        // sweep x, solve the quadric for z
        c.sample = [y](double s) {
            cdouble x = 2.4 * std::cos(s);
            cdouble half = x * y / 2.0;
            cdouble disc = std::sqrt(half * half - (x * x + y * y - 4.0));
            return std::array<cdouble, 3>{x, y, half + disc};
        };
    }
    return c;
}

}  // namespace

std::vector<ComponentDescriptor> reducible_components(int n) {
    std::vector<ComponentDescriptor> out;
    if (n == -2) {
        ComponentDescriptor c;
        c.kind = ComponentKind::reducible_surface;
        c.label = "{(x,y,z) : x^2+y^2+z^2-xyz=4}";
        c.sample = [](double s) {
            double x = 2.0 * std::cos(s);
            double y = 1.7 * std::sin(2.0 * s);
            cdouble half = x * y / 2.0;
            cdouble disc = std::sqrt(cdouble(half * half - (x * x + y * y - 4.0)));
            return std::array<cdouble, 3>{x, y, half + disc};
        };
        out.push_back(std::move(c));
        return out;
    }
    for (const TraceAngle& t : root_set(RootSetLabel::R, n + 2).elements)
        out.push_back(reducible_fiber_component(t));
    return out;
}

VarietyPoint canonical_param(int n, ComplexVal y, int eps) {
    HatFamily hat = hats(n);
    FactorFamily fam = family(n);
    const cdouble yv = y.value;
    cdouble lhat = hat.l_hat.eval(yv);
    if (std::abs(lhat) <= 1e-12 * (1.0 + hat.l_hat.max_abs_coeff()))
        throw on_excluded_fiber("l_hat vanishes on this fiber");

    cdouble x = static_cast<double>(eps) * std::sqrt(1.0 - fib(n - 1).eval(yv));
    cdouble z;
    if (std::abs(x) > 1e-6) {
        z = (yv - fib(n).eval(yv)) / x;
    } else {
        // the x = 0 fiber: over a zero of h_hat the curve passes through
        // (0, y, 0); over y = 0 with n = 2 mod 4 the radical gives +-z_0
        x = cdouble(0, 0);
        cdouble hhat = hat.h_hat.eval(yv);
        if (std::abs(hhat) <= 1e-10 * (1.0 + hat.h_hat.max_abs_coeff()))
            z = cdouble(0, 0);
        else
            z = -static_cast<double>(eps) * fam.k.eval(yv) * std::sqrt(-hhat / lhat);
    }
    VarietyPoint p;
    p.x = ComplexVal(x, y.tol);
    p.y = y;
    p.z = ComplexVal(z, y.tol);
    p.tag = PointTag::canonical;
    p.eps = eps;
    return p;
}

IntPoly hyperelliptic_model(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("smooth model needs |n| > 2");
    HatFamily hat = hats(n);
    IntPoly model = -(hat.h_hat * hat.l_hat);
    IntPoly one_minus = IntPoly{1} - fib(n - 1);
    if (imod(n, 4) == 2) {
        if (!(IntPoly{0, 0, 1} * model == one_minus))
            throw derivation_mismatch("y^2 (-h_hat l_hat) != 1 - f_{n-1}");
    } else {
        if (!(model == one_minus)) throw derivation_mismatch("-h_hat l_hat != 1 - f_{n-1}");
    }
    return model;
}

int genus(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("genus needs |n| > 2");
    int an1 = std::abs(n - 1);
    int g = imod(n, 4) == 2 ? (an1 - 4) / 2 : (an1 - 2) / 2;
    int by_degree = (hyperelliptic_model(n).degree() - 1) / 2;
    if (g != by_degree) throw derivation_mismatch("genus formula disagrees with model degree");
    return g;
}

ComponentDescriptor canonical_component(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("canonical component needs |n| > 2");
    ComponentDescriptor c;
    c.kind = ComponentKind::canonical;
    c.irreducible_locus = true;
    c.model = hyperelliptic_model(n);
    std::ostringstream os;
    os << "birational to w^2 = " << c.model->to_string("y") << ", genus " << genus(n);
    c.label = os.str();
    c.sample = [n](double t) {
        cdouble y = 1.8 * std::cos(t) + cdouble(0, 0.1) * std::sin(3 * t);
        VarietyPoint p = canonical_param(n, ComplexVal(y), (std::cos(5 * t) > 0) ? 1 : -1);
        return std::array<cdouble, 3>{p.x.value, p.y.value, p.z.value};
    };
    return c;
}

std::optional<ComponentDescriptor> extra_line(int n) {
    if (imod(n, 4) != 2) return std::nullopt;
    ComponentDescriptor c;
    c.kind = ComponentKind::extra_line;
    c.irreducible_locus = true;
    c.label = "{(0,0,z)}";
    c.sample = [](double t) { return std::array<cdouble, 3>{0.0, 0.0, 3.0 * std::sin(t)}; };
    return c;
}

std::pair<VarietyPoint, VarietyPoint> extra_line_meets_canonical(int n) {
    if (imod(n, 4) != 2) throw no_extra_line("no (0,0,z) component unless n = 2 mod 4");
    double z0sq = 4.0 * (0.5 - 1.0 / static_cast<double>(n));
    cdouble z0 = std::sqrt(cdouble(z0sq, 0.0));
    VarietyPoint p;
    p.x = ComplexVal(0, 0);
    p.y = ComplexVal(0, 0);
    p.z = ComplexVal(z0);
    p.tag = PointTag::extra_line;
    p.eps = 1;
    VarietyPoint q = p;
    q.z = ComplexVal(-z0);
    q.eps = -1;
    return {p, q};
}

std::vector<VarietyPoint> multiplicity_points(int n) {
    std::vector<VarietyPoint> out;
    if (std::abs(n) <= 2) return out;
    const IntPoly& j = family(n).j;
    const double rt2 = std::sqrt(2.0);
    for (cdouble y0 : roots_complex(j, 1e-10)) {
        for (int eps : {1, -1}) {
            VarietyPoint p;
            p.x = ComplexVal(eps * rt2, 0.0);
            p.y = ComplexVal(y0);
            p.z = ComplexVal(static_cast<double>(eps) * y0 / rt2);
            p.tag = PointTag::multiplicity;
            p.eps = eps;
            out.push_back(p);
        }
    }
    return out;
}

std::vector<VarietyPoint> intersection_lattice(int n) {
    if (n == -2) throw minus_two_unsupported("the reducible locus of n = -2 is a surface");
    std::vector<VarietyPoint> out;

    for (const TraceAngle& t : root_set(RootSetLabel::Rfib, n + 2).elements) {
        double y = t.value();
        for (int eps : {1, -1}) {
            VarietyPoint p;
            p.x = ComplexVal(eps * y, 0.0);
            p.y = ComplexVal(y, 0.0);
            p.z = ComplexVal(2.0 * eps, 0.0);
            p.eps = eps;
            bool on_line = (imod(n, 4) == 2) && t == TraceAngle(1, 4);
            p.tag = on_line ? PointTag::extra_line : PointTag::intersection;
            out.push_back(p);
        }
    }

    cdouble s = std::sqrt(cdouble(2.0 - n, 0.0));
    for (int eps : {1, -1}) {
        VarietyPoint p;
        p.x = ComplexVal(static_cast<double>(eps) * s);
        p.y = ComplexVal(2.0, 0.0);
        p.z = ComplexVal(static_cast<double>(eps) * s);
        p.tag = PointTag::intersection;
        p.eps = eps;
        out.push_back(p);
    }
    if (imod(n, 2) == 0) {
        for (int eps : {1, -1}) {
            VarietyPoint p;
            p.x = ComplexVal(static_cast<double>(eps) * s);
            p.y = ComplexVal(-2.0, 0.0);
            p.z = ComplexVal(-static_cast<double>(eps) * s);
            p.tag = PointTag::intersection;
            p.eps = eps;
            out.push_back(p);
        }
    }
    return out;
}

namespace {

ComponentDescriptor irr_component(const std::string& label,
                                  std::function<std::array<cdouble, 3>(double)> f) {
    ComponentDescriptor c;
    c.kind = ComponentKind::nonhyp_component;
    c.irreducible_locus = true;
    c.label = label;
    c.sample = std::move(f);
    return c;
}

}  // namespace

std::vector<ComponentDescriptor> nonhyperbolic_table(int n) {
    if (std::abs(n) > 2) throw out_of_range("table covers |n| <= 2 only");
    std::vector<ComponentDescriptor> out = reducible_components(n);
    switch (n) {
        case 2:
            out.push_back(irr_component("{(0,y,0)}", [](double t) {
                return std::array<cdouble, 3>{0.0, 3.0 * std::sin(t), 0.0};
            }));
            out.push_back(irr_component("{(0,0,z)}", [](double t) {
                return std::array<cdouble, 3>{0.0, 0.0, 3.0 * std::sin(t)};
            }));
            break;
        case 1:
            out.push_back(irr_component("{(1,y,y-1)}", [](double t) {
                double y = 3.0 * std::sin(t);
                return std::array<cdouble, 3>{1.0, y, y - 1.0};
            }));
            out.push_back(irr_component("{(-1,y,-y+1)}", [](double t) {
                double y = 3.0 * std::sin(t);
                return std::array<cdouble, 3>{-1.0, y, -y + 1.0};
            }));
            break;
        case 0: {
            const double rt2 = std::sqrt(2.0);
            out.push_back(irr_component("{(sqrt2, sqrt2 z, z)}", [rt2](double t) {
                double z = 3.0 * std::sin(t);
                return std::array<cdouble, 3>{rt2, rt2 * z, z};
            }));
            out.push_back(irr_component("{(-sqrt2, -sqrt2 z, z)}", [rt2](double t) {
                double z = 3.0 * std::sin(t);
                return std::array<cdouble, 3>{-rt2, -rt2 * z, z};
            }));
            break;
        }
        case -1:
            out.push_back(irr_component("{(x, x^2-1, x)}", [](double t) {
                double x = 2.2 * std::sin(t);
                return std::array<cdouble, 3>{x, x * x - 1.0, x};
            }));
            break;
        case -2:
            out.push_back(irr_component("{(0,0,z)}", [](double t) {
                return std::array<cdouble, 3>{0.0, 0.0, 3.0 * std::sin(t)};
            }));
            out.push_back(irr_component("{(2,2,2)}", [](double) {
                return std::array<cdouble, 3>{2.0, 2.0, 2.0};
            }));
            out.push_back(irr_component("{(-2,2,-2)}", [](double) {
                return std::array<cdouble, 3>{-2.0, 2.0, -2.0};
            }));
            break;
    }
    return out;
}

PslQuotient psl_quotient(int n) {
    if (std::abs(n) <= 2) throw non_hyperbolic_n("psl quotient computed for |n| > 2");
    PslQuotient out;
    out.n = n;
    IntPoly model = hyperelliptic_model(n);
    if (imod(n, 2) == 1) {
        out.quotient_model = model;
        out.description =
            "Y = Y0: quotient of w^2 = -h_hat l_hat by the hyperelliptic involution "
            "(y,w) -> (y,-w); birational to the affine line";
        return out;
    }

    out.quotient_model = model.even_powers();
    out.description =
        "Y0: quotient of w^2 = -h_hat l_hat by (y,w) -> (y,-w) and (y,w) -> (-y,w); "
        "wbar = model(ybar), birational to the affine line";

    // non-lifting points (2, ybar, ybar/2): lifts y have f_n(y) = 0 and
    // f_{n-1}(y) = 1, which is the zero set of l_n
    for (const TraceAngle& t : zero_set(FamilyPoly::l, n).elements) {
        PslNonLiftPoint p;
        p.y_lift = t;
        p.ybar = t.squared_value();
        p.xbar = 2.0;
        p.zbar = p.ybar / 2.0;
        p.x_is_sqrt2 = true;
        out.nonlift_points.push_back(p);
    }
    // non-lifting points (0, ybar, 0): lifts y have f_{n-2}(y) = 0 and
    // f_{n-1}(y) = -1, which is the zero set of l_{n-2}
    for (const TraceAngle& t : zero_set(FamilyPoly::l, n - 2).elements) {
        PslNonLiftPoint p;
        p.y_lift = t;
        p.ybar = t.squared_value();
        p.xbar = 0.0;
        p.zbar = 0.0;
        p.x_is_sqrt2 = false;
        out.nonlift_points.push_back(p);
    }

    IntPoly q1 = (fib(n - 1) + IntPoly{1}).even_powers();
    IntPoly fn_plus_u = fib(n) + IntPoly{0, 1};
    IntPoly q2 = (fn_plus_u * fn_plus_u).even_powers();
    IntPoly q3 = (fib(n - 1) + IntPoly{1}).even_powers();
    out.nonlift_line_q = std::array<IntPoly, 3>{q1, q2, q3};
    out.nonlift_00z_line = (imod(n, 4) == 0);
    return out;
}

double point_residual(const VarietyPoint& p, int n) {
    cdouble x = p.x.value, y = p.y.value, z = p.z.value;
    switch (p.tag) {
        case PointTag::reducible:
        case PointTag::filling:
            return std::abs(eval_reducible(x, y, z));
        case PointTag::intersection:
            return std::max(std::abs(eval_reducible(x, y, z)),
                            eval_phi(n, x, y, z).max_abs3());
        case PointTag::multiplicity: {
            PhiEval pe = eval_phi(n, x, y, z);
            return std::max({std::abs(pe.phi1), std::abs(pe.phi2), std::abs(pe.phi3p)});
        }
        default:
            return eval_phi(n, x, y, z).max_abs3();
    }
}

double component_residual(const ComponentDescriptor& c, int n, int samples) {
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        double t = -2.7 + 5.4 * (static_cast<double>(k) + 0.5) / samples;
        auto [x, y, z] = c.sample(t);
        double r;
        if (c.irreducible_locus) {
            r = eval_phi(n, x, y, z).max_abs3();
        } else {
            r = std::abs(eval_reducible(x, y, z));
            if (c.y_fiber) r = std::max(r, std::abs(y - c.y_fiber->value()));
        }
        worst = std::max(worst, r);
    }
    return worst;
}

}  // namespace ptb
