#pragma once

#include <optional>

#include "rnfq/surface.hpp"

namespace rnfq {

// Unique representative c_D*C + sum a_hat_i*A_i + f_hat*F of a divisor class,
// with 0 <= a_hat_i < d_i.  Equality of canonical forms is linear equivalence.
struct CanonicalClass {
    Int c_D;
    std::vector<Int> a_hat;
    Int f_hat;

    bool operator==(const CanonicalClass&) const = default;
    bool is_zero() const;
    // phi = f_hat + sum a_hat_i/d_i; the pair (phi, c_D) kills exactly torsion.
    Rat phi(const FakeQuadric& S) const;
    Divisor to_divisor() const;
    std::string to_string() const;
};

struct LatticePoint {
    Rat phi;  // D.C, in (1/kappa) Z
    Int c;    // D.F

    bool operator==(const LatticePoint&) const = default;
};

struct GroupStructure {
    int rank = 2;
    std::vector<Int> invariant_factors;  // m_1 | m_2 | ... | m_{r-1}
};

CanonicalClass canonical_form(const FakeQuadric& S, const Divisor& D);
LatticePoint lattice_point(const FakeQuadric& S, const Divisor& D);
GroupStructure group_structure(const FakeQuadric& S);
bool linearly_equivalent(const FakeQuadric& S, const Divisor& D1, const Divisor& D2);

// Least k >= 1 with k*D ~ 0, when D is a torsion class; nullopt otherwise.
std::optional<Int> torsion_order(const FakeQuadric& S, const Divisor& D);

struct HorizontalDecomposition {
    Int c;
    Int e;
    Int g;  // normalized to 0, absorbed into c via G ~ kappa*C
};

// D ~ c*C + e*E when the class lies in the subgroup generated by C and E.
std::optional<HorizontalDecomposition> horizontal_membership(const FakeQuadric& S,
                                                             const Divisor& D);

// Class arithmetic through canonical forms.
CanonicalClass class_add(const FakeQuadric& S, const CanonicalClass& a, const CanonicalClass& b);
CanonicalClass class_scale(const FakeQuadric& S, const Int& k, const CanonicalClass& a);

}  // namespace rnfq
