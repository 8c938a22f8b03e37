#pragma once

#include <optional>
#include <string>

#include "carwb/matrix.hpp"
#include "carwb/presentation.hpp"

namespace carwb {

// Catalog families, one per irreducible-list case plus the global family.
enum class Family {
    DISK2,     // 2-dim disk representations pi_{x,phi}
    DISK1,     // 1-dim disk characters rho_phi
    WTCAR2d,   // 2^d-dim twisted family pi_{x,phi}
    WTCAR1d,   // 2^{d-1}-dim twisted characters rho_phi
    WCAR_A,    // |y| = 1, 2-dim
    WCAR_B1,   // x1 = (1-|y|)/2, 2-dim
    WCAR_B21,  // interior, 4-dim
    WCAR_B22,  // x2 = 1/2, 2-dim
    WCARZ_1,   // y = 0 interior, 4-dim
    WCARZ_2A,  // y = 0, x1 = 1/2, 2-dim
    WCARZ_2B,  // y = 0, x2 = 1/2, 2-dim
    WCARZ_3,   // y = 0, x1 = x2 = 1/2, 2-dim
    GLOBAL,    // 4-dim family on [0,1]x[0,1/2]^2 x T^3
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// A family tag plus parameter tuple. Only the fields a family uses are
// meaningful; the rest stay at their defaults.
struct ParamPoint {
    Family family = Family::DISK2;
    double x = 0.0, x1 = 0.0, x2 = 0.0, r1 = 0.0;  // reals in stated closed ranges
    double phi = 0.0, phi1 = 0.0, phi2 = 0.0;      // angles in [0, 2pi)
    double mu = 0.5;                               // WTCAR deformation
    Complex y{0.0, 0.0};                           // WCAR central value
    int d = 1;                                     // WTCAR degrees of freedom
};

// Field-wise comparison of the family's active parameters; angles modulo 2pi.
bool approx_equal(const ParamPoint& p, const ParamPoint& q, double tol = 1e-9);

struct Representation {
    std::vector<Mat> generators;
    Presentation presentation;
    std::optional<ParamPoint> source;  // nullopt for custom tuples

    Index dim() const { return generators.empty() ? 0 : generators[0].rows(); }
};

// --- disk (d = 1) ---------------------------------------------------------
Representation disk_rep(double x, double phi);  // x in [0,1/2], phi in [0,2pi)
Representation disk_char(double phi);           // 1-dim character
Mat v_matrix(double phi);                       // the boundary conjugator V(phi)

// --- twisted family, general d --------------------------------------------
Representation wtcar_rep(int d, double mu, double x, double phi);
Representation wtcar_char(int d, double mu, double phi);

// --- two degrees of freedom, central value y ------------------------------
// Case dispatch: |y| = 1; then x1 = (1-|y|)/2; then x2 = 1/2; else interior.
Representation wcar_rep(Complex y, double x1, double x2, double phi1, double phi2);
// y = 0 catalog; dispatch on x1 = 1/2 and x2 = 1/2.
Representation wcar_zero_rep(double x1, double x2, double phi1, double phi2);
// 4-dim global family; satisfies a1 a2 + a2 a1 = r1 (1-2 x1) e^{i phi}.
Representation global_rep(double r1, double x1, double x2, double phi, double phi1,
                          double phi2);

struct Lemma12Params {
    double t = 0.0;    // root <= 1/2 of t(1-t) = |z|^2
    double psi = 0.0;  // arg z in [0,2pi), 0 when |z| ~ 0
    Complex z{0.0, 0.0};
};

// Parameters of the reduction of the x1 = 1/2 slice of the global family to
// its r1 = 0 normal form.
Lemma12Params lemma12_params(double r1, double x2, double phi, double phi1, double phi2);

// Deterministic representative of the equivalence class of p.
ParamPoint canonical_params(const ParamPoint& p);

// The catalog representation at p (dispatching boundary cases).
Representation rep_for(const ParamPoint& p);

// Angle normalized to [0, 2pi).
double wrap_angle(double phi);

}  // namespace carwb
