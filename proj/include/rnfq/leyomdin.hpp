#pragma once

#include "rnfq/surfacecover.hpp"

namespace rnfq {

// Local combinatorial data of one weighted blow-up step of a semistable
// reduction: weights (w_x, w_y), axis exponents (a_x, a_y), tangency
// exponents e_i, the grading kappa = k/s, axis multiplicities (m_x, m_y)
// and the leading degree m.
struct LYInput {
    Int w_x, w_y;
    Int a_x, a_y;
    std::vector<Int> e;
    Int kappa;
    Int s;
    Int m_x, m_y;
    Int m;
};

struct LYDerived {
    Int nu0;
    Int w_z;
    Int m_omega;
    Int u, v;          // u w_x + v w_y = 1
    Int c;             // v m_x - u m_y
    Int e0, e_inf;
    Int delta;         // m + s*kappa
    Int delta_omega;   // gcd(m_omega, e0, e_inf, e_1..e_r)
    Int d;             // m_omega * delta
    Int beta1, beta2;  // beta1 delta_omega + beta2 kappa = 1
    Int m_hat;         // beta2 delta - s
};

struct LYOutput {
    LYDerived derived;
    FakeQuadric quadric;  // indices ordered (0, 1..r, inf)
    Divisor D_S;          // delta sum q_i A_i + m C - delta E + sum G_j
    CoverSpec cover;      // (delta*delta_omega, D_h, H_h)
    CycPoly charpoly;
};

LYDerived derive(const LYInput& in);
LYOutput build_surface(const LYInput& in);

// Closed form (t-1)^{2-s} (t^{dd_w}-1)^s / ((t^delta-1)(t^{gcd(m, s d_w)}-1)).
CycPoly monodromy_charpoly(const LYInput& in);

// Degree delta*delta_omega cover of the line with multiplicities m_hat at 0,
// 1 at s points and -(s+m_hat) at infinity.
P1Cover primitive_vertical(const LYInput& in);

}  // namespace rnfq
