#ifndef PTB_RELMATRIX_HPP
#define PTB_RELMATRIX_HPP

#include "ptb/fib.hpp"
#include "ptb/laurent.hpp"

namespace ptb {

struct derivation_mismatch : std::runtime_error {
    explicit derivation_mismatch(const std::string& m) : std::runtime_error(m) {}
};
struct non_generic : std::runtime_error {
    explicit non_generic(const std::string& m) : std::runtime_error(m) {}
};

/// A(a,t) = [[a, 0], [t, 1/a]]
SymMatrix2 gen_A();
/// A(a,s), the irreducible-locus form with s = t
SymMatrix2 gen_A_s();
/// B(b,s) = [[b, s], [0, 1/b]]
SymMatrix2 gen_B();

/// B^n for any integer n from the Cayley-Hamilton closed form
/// B^n = f_n(t_B) B - f_{n-1}(t_B) I, keeping n a parameter.
SymMatrix2 b_power_closed(int n);

/// W = A^-1 B A^2 B A^-1 over {a, b, s, t}; independent of n.
const SymMatrix2& build_W();

/// F(a,b,s,t) = B^-n - W, the matrix of the group relation.
SymMatrix2 build_F(int n);

/// The four closed-form entries of F used as the symbolic concordance target.
struct ClosedFormEntries {
    LaurentPoly f11, f12, f21, f22;
};
ClosedFormEntries closed_F_entries(int n);

/// Trace-coordinate generators (all in x, y, z):
LaurentPoly F12_prime(int n);  // f_n(y) + z x - y
LaurentPoly F21_prime();       // x z^2 - x^2 y z + x^3 + x y^2 - y z - 2 x
LaurentPoly D_prime(int n);

struct PhiGenerators {
    LaurentPoly phi1, phi2, phi3, phi3p;
};
/// phi_1 = x^2 - 1 + f_{n-1}(y), phi_2 = z x - y + f_n(y),
/// phi_3 = x (f_{n+1}(y) - 1) - z f_n(y) = j_n(y) phi_3',
/// phi_3' = x k_n(y) - z l_n(y).
/// Built both directly and from the linear combinations of D', F12', F21';
/// throws derivation_mismatch when the two constructions disagree.
PhiGenerators phi_generators(int n);

/// Trace of the longitude word a b a^-1 b a b^-1 a^-1 b^-1 in x, y, z.
const LaurentPoly& longitude_trace();
/// Trace of the meridian word b a: the coordinate z.
LaurentPoly meridian_trace();

/// Trace of the spin image of the first generator: -z f_n(y) + x f_{n+1}(y).
LaurentPoly spin_image_x(int n);
/// x - spin(x) = -phi_3 as an exact identity.
bool spin_fixed_identity(int n);

/// ---- numeric helpers ----

struct PhiEval {
    cdouble phi1, phi2, phi3, phi3p;
    double max_abs() const;
    double max_abs3() const;  // phi1, phi2, phi3 only
};
PhiEval eval_phi(int n, cdouble x, cdouble y, cdouble z);

/// chi(lambda) at a numeric point (closed quartic).
cdouble eval_longitude(cdouble x, cdouble y, cdouble z);

/// x^2 + y^2 + z^2 - x y z - 4 at a numeric point.
cdouble eval_reducible(cdouble x, cdouble y, cdouble z);

/// A representation in standard form recovered from trace coordinates with
/// principal square-root branches; throws non_generic at x = +-2 or y = +-2.
struct Rep {
    cdouble a, b, s;
};
Rep recover(cdouble x, cdouble y, cdouble z, double tol = 1e-10);

/// Largest |entry| of F(a,b,s,s) at a numeric representation.
double relation_residual(const Rep& r, int n);

}  // namespace ptb

#endif
