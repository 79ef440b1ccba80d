#pragma once

#include "rnfq/classgroup.hpp"

namespace rnfq {

struct BettiTriple {
    Int h0;
    Int h1;
    Int h2;
    Int chi;

    bool operator==(const BettiTriple&) const = default;
};

enum class Region { H0Only, H1Only, H2Only, AllZero, Threshold };

std::string region_name(Region r);

// b_j = 1 + phi - sum { (a_hat_i + (j - c_D) q_i) / d_i }.
Int b_term(const FakeQuadric& S, const CanonicalClass& cls, const Int& j);

Int h0(const FakeQuadric& S, const Divisor& D);
Int h2(const FakeQuadric& S, const Divisor& D);
Int chi(const FakeQuadric& S, const Divisor& D);
BettiTriple betti(const FakeQuadric& S, const Divisor& D);
Region region(const FakeQuadric& S, const Divisor& D);

// Combined Riemann-Roch correction of the two singular points of a fiber:
// -sum_{j=0}^{m} { (n + (j-m) q) / d } + m (d-1) / (2d), for m >= -1.
Rat combined_correction(const Int& d, const Int& q, const Int& n, const Int& m);

// Independent section count: dimension of the space of (1,1,alpha)-weighted
// homogeneous polynomials subject to the vanishing orders that cut out
// H^0(S, O(D)), computed as corank of an exact rational constraint matrix.
// Requires alpha >= 1 and 1 <= q_i < d_i; intended for desk-scale degrees.
Int h0_oracle(const FakeQuadric& S, const Divisor& D, const Int& degree_cap = 60);

}  // namespace rnfq
