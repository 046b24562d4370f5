#ifndef PTB_VARIETY_HPP
#define PTB_VARIETY_HPP

#include <array>
#include <functional>
#include <optional>

#include "ptb/fib.hpp"
#include "ptb/relmatrix.hpp"

namespace ptb {

struct non_hyperbolic_n : std::runtime_error {
    explicit non_hyperbolic_n(const std::string& m) : std::runtime_error(m) {}
};
struct no_extra_line : std::runtime_error {
    explicit no_extra_line(const std::string& m) : std::runtime_error(m) {}
};
struct on_excluded_fiber : std::runtime_error {
    explicit on_excluded_fiber(const std::string& m) : std::runtime_error(m) {}
};
struct out_of_range : std::runtime_error {
    explicit out_of_range(const std::string& m) : std::runtime_error(m) {}
};
struct minus_two_unsupported : std::runtime_error {
    explicit minus_two_unsupported(const std::string& m) : std::runtime_error(m) {}
};

enum class PointTag {
    canonical,
    extra_line,
    reducible,
    multiplicity,
    intersection,
    discrete_faithful,
    filling,
    psl_nonlift,
};
const char* tag_name(PointTag t);

struct VarietyPoint {
    ComplexVal x, y, z;
    PointTag tag = PointTag::canonical;
    int eps = 0;  // +-1 where applicable
};

enum class ComponentKind {
    reducible_conic,
    reducible_line,
    reducible_surface,
    canonical,
    extra_line,
    psl_line,
    psl_point,
    nonhyp_component,
};
const char* kind_name(ComponentKind k);

/// One component of the character variety with its exact defining data and a
/// real-parameter sampler for numeric verification.
struct ComponentDescriptor {
    ComponentKind kind = ComponentKind::canonical;
    std::string label;
    bool irreducible_locus = false;  // verify against the phi system vs the quadric
    std::optional<TraceAngle> y_fiber;  // reducible conic/line: the exact y value
    int line_sign = 0;                  // reducible line: z = line_sign * x
    std::optional<IntPoly> model;       // canonical: w^2 = model(y)
    std::function<std::array<cdouble, 3>(double)> sample;
};

/// Reducible (= abelian) characters: one conic or line per y in R_{n+2} for
/// n != -2, the full Markov-like surface for n = -2.
std::vector<ComponentDescriptor> reducible_components(int n);

/// A point of the canonical curve D over the fiber y: x = eps sqrt(1-f_{n-1}(y)),
/// z solved from phi_2 when x != 0 and from the radical form on the x = 0
/// fiber.  Throws on_excluded_fiber when l_hat(y) = 0 to tolerance.
VarietyPoint canonical_param(int n, ComplexVal y, int eps);

/// Right side of the smooth model w^2 = -h_hat(y) l_hat(y); |n| > 2.
IntPoly hyperelliptic_model(int n);
int genus(int n);

/// Canonical-component descriptor (|n| > 2) with the smooth model attached.
ComponentDescriptor canonical_component(int n);

/// The line (0,0,z), present exactly when n = 2 mod 4.
std::optional<ComponentDescriptor> extra_line(int n);
/// Intersection of that line with D: (0,0,+-z_0), z_0 = 2 sqrt(1/2 - 1/n).
std::pair<VarietyPoint, VarietyPoint> extra_line_meets_canonical(int n);

/// Multiplicity-two points (eps sqrt2, y0, eps y0/sqrt2) over roots y0 of j_n.
std::vector<VarietyPoint> multiplicity_points(int n);

/// Points where the reducible locus meets C: the family (eps y, y, 2 eps)
/// over y in R_{n+2}^fib, plus (+-sqrt(2-n), 2, +-sqrt(2-n)), plus for even n
/// (+-sqrt(2-n), -2, -+sqrt(2-n)).  Throws minus_two_unsupported for n = -2.
std::vector<VarietyPoint> intersection_lattice(int n);

/// The character variety components for |n| <= 2 (both loci).
std::vector<ComponentDescriptor> nonhyperbolic_table(int n);

/// A PSL2 character that does not lift, in squared-trace coordinates.
struct PslNonLiftPoint {
    TraceAngle y_lift;  // exact lift: ybar = (value of y_lift)^2
    cdouble xbar, ybar, zbar;
    bool x_is_sqrt2;  // true: (2, ybar, ybar/2); false: (0, ybar, 0)
};

struct PslQuotient {
    int n;
    /// Curve being quotiented (odd n) or the pushed-down even model
    /// wbar = model(ybar) (even n).
    IntPoly quotient_model;
    std::string description;
    // even n only:
    std::vector<PslNonLiftPoint> nonlift_points;
    std::optional<std::array<IntPoly, 3>> nonlift_line_q;  // q1, q2, q3
    bool nonlift_00z_line = false;
};
PslQuotient psl_quotient(int n);

/// Max residual of `samples` points of the component against its locus
/// (phi system for the irreducible locus, the quadric for the reducible one).
double component_residual(const ComponentDescriptor& c, int n, int samples = 20);

/// Residual of a point against the locus named by its tag.
double point_residual(const VarietyPoint& p, int n);

}  // namespace ptb

#endif
