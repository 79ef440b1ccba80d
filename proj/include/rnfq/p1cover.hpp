#pragma once

#include "rnfq/cycpoly.hpp"

namespace rnfq {

struct BranchPoint {
    std::string label;
    Int m;  // multiplicity, any integer; only m mod d ramifies
};

// Cyclic d-fold cover of the projective line branched with multiplicity m_j
// over the labeled points; requires sum m_j = 0 (mod d).
class P1Cover {
public:
    static P1Cover create(const Int& d, std::vector<BranchPoint> branch);

    const Int& d() const { return d_; }
    const std::vector<BranchPoint>& branch() const { return branch_; }

    // n = gcd(d, m_1, ..., m_s): number of connected components.
    Int components() const;

    // Dimension of the eigenspace of H^1(O) for the eigenvalue zeta_d^l.
    Int h1_eigen(const Int& l) const;
    std::vector<Int> dims() const;  // indexed by l = 0..d-1
    Int genus() const;              // sum of dims = h^1(O)

    // Characteristic polynomial of the monodromy on H^1(cover, C):
    // (t^n-1)^2 (t^d-1)^{s-2} / prod (t^{gcd(d,m_j)}-1).
    CycPoly alexander() const;

    // Multiplicities reduced mod d, zeros dropped, sorted; two covers with the
    // same normalization have identical eigenspace data.
    std::vector<Int> normalized_mults() const;

private:
    Int d_ = 1;
    std::vector<BranchPoint> branch_;
};

// Monodromy characteristic polynomial on H^1 of a cyclic branched cover of an
// orientable compact surface: (t^r-1)^2 (t^e-1)^{-chi_open} / prod (t^mu - 1),
// with r components, e sheets, chi_open the Euler characteristic of the
// complement of the branch set, and mu the preimage counts.
CycPoly zeta_alexander(const Int& r, const Int& e, const Int& chi_open,
                       const std::vector<Int>& preimage_counts);

}  // namespace rnfq
