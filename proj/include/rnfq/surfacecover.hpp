#pragma once

#include "rnfq/cohomology.hpp"
#include "rnfq/p1cover.hpp"

namespace rnfq {

// Cyclic cover of S given by (d, D, H) with D ~ d*H.  D is a true divisor
// with labeled components; H only matters as a class.  The caller asserts
// that D mod d has Q-normal crossings (automatic for distinct generator
// curves); the flag is recorded and reports are tagged when it is withheld.
struct CoverSpec {
    FakeQuadric S;
    Int d;
    Divisor D;
    Divisor H;
    bool nc_asserted = true;
};

// Checks d >= 1 and D ~ d*H; returns the reduced divisor Dt = D - d*H (~ 0).
Divisor validate(const CoverSpec& spec);

// Class of the twist whose h^1 is the zeta_d^l eigenspace, computed from the
// reduction (d, D - dH, 0) by per-component floors.
Divisor L_divisor(const CoverSpec& spec, const Int& l);
CanonicalClass L_class(const CoverSpec& spec, const Int& l);

struct EigenReport {
    std::vector<Int> dims;  // l = 0..d-1
    Int h1_total;
    CycPoly charpoly;       // on H^1(cover, C)
    bool hypothesis_unverified = false;
};

EigenReport eigen_report(const CoverSpec& spec);

// Restriction of the cover to a curve in {C, E, F(label), A(i)}; branch
// multiplicities at the quotient points are the coefficients of the
// exceptional component adjacent to the curve in the resolved fan.
P1Cover restrict_to(const CoverSpec& spec, const CurveId& curve);

struct HorizontalReduction {
    Int gamma, eta;       // H ~ gamma*C + eta*E + T'
    Int c_prime, e_prime; // c = d*gamma + kappa*c', e = d*eta + kappa*e'
    CanonicalClass T_prime;
    Int d_tau;            // order of T'
    Int tau;              // d / d_tau
    Int n;                // gcd(d, coefficients of the reduced divisor)
    std::vector<Int> g;   // G-fiber multiplicities of D
};

// Reduction of a horizontal cover (D supported on C, E, G) to (d, D', T')
// with D' = kappa c' C + kappa e' E + sum g_j G_j and T' torsion meeting the
// cyclic group generated by T = E - C only in 0.
HorizontalReduction horizontal_reduce(const CoverSpec& spec);

// The tau-fold cover of the line through which all special-fiber restrictions
// factor; branch multiplicities (c', e', g_1..g_s) mod tau.
P1Cover gcv_cover(const CoverSpec& spec);
P1Cover gcv_cover(const HorizontalReduction& hr);

struct SplitReport {
    Int nu_v, nu_h, nu_s;       // multiplicity gcds of the primitive parts
    Int d_v, d_h, mu0;
    P1Cover vertical_cover;     // restriction of the d_v-subcover to E
    std::optional<P1Cover> gcv; // greatest common vertical cover (degree tau)
    std::optional<HorizontalReduction> reduction;
    CycPoly delta1;             // vertical factor
    CycPoly delta2h;            // horizontal factor (full H^1(C) polynomial)
    CycPoly delta2m;            // mixed factor = delta0
    CycPoly delta;              // delta1 * delta2h
};

SplitReport split_general(const CoverSpec& spec);

// gcd of d and all coefficients of the pull-back of D - dH under one special
// blow-up per singular point; both blow-up choices are evaluated and must
// agree.
Int connected_components(const CoverSpec& spec);

}  // namespace rnfq
