#include "rnfq/p1cover.hpp"

#include <algorithm>
#include <set>

namespace rnfq {

P1Cover P1Cover::create(const Int& d, std::vector<BranchPoint> branch) {
    if (d < 1) throw Error("BadDegree", "cover degree must be >= 1");
    std::set<std::string> labels;
    Int sum = 0;
    for (auto& b : branch) {
        if (!labels.insert(b.label).second)
            throw Error("DuplicateLabel", "branch labels must be distinct: " + b.label);
        sum += b.m;
    }
    if (mod_floor(sum, d) != 0)
        throw Error("BadBranchSum", "sum of multiplicities must vanish mod d");
    P1Cover c;
    c.d_ = d;
    c.branch_ = std::move(branch);
    return c;
}

Int P1Cover::components() const {
    Int n = d_;
    for (const auto& b : branch_) n = gcd_int(n, b.m);
    return n;
}

Int P1Cover::h1_eigen(const Int& l) const {
    Int n = components();
    Int dhat = d_ / n;
    Int lr = mod_floor(l, d_);
    if (mod_floor(lr, dhat) == 0) return 0;
    Rat s = -1;
    for (const auto& b : branch_) s += frac_part(make_rat(lr * (b.m / n), dhat));
    if (s.get_den() != 1 || s.get_num() < 0) throw Error("Internal", "h1_eigen not a count");
    return s.get_num();
}

std::vector<Int> P1Cover::dims() const {
    std::vector<Int> out;
    for (Int l = 0; l < d_; ++l) out.push_back(h1_eigen(l));
    return out;
}

Int P1Cover::genus() const {
    Int g = 0;
    for (const auto& v : dims()) g += v;
    return g;
}

CycPoly P1Cover::alexander() const {
    if (!components().fits_slong_p() || !d_.fits_slong_p())
        throw Error("Overflow", "cover degree too large");
    long n = components().get_si();
    long d = d_.get_si();
    long s = static_cast<long>(branch_.size());
    CycPoly p = CycPoly::factor(n, 2) * CycPoly::factor(d, s - 2);
    for (const auto& b : branch_) p /= CycPoly::factor(gcd_int(d_, b.m).get_si(), 1);
    if (!p.is_polynomial()) throw Error("Internal", "monodromy charpoly not a polynomial");
    if (p.degree() != 2 * genus()) throw Error("Internal", "charpoly degree mismatch");
    return p;
}

std::vector<Int> P1Cover::normalized_mults() const {
    std::vector<Int> out;
    for (const auto& b : branch_) {
        Int m = mod_floor(b.m, d_);
        if (m != 0) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CycPoly zeta_alexander(const Int& r, const Int& e, const Int& chi_open,
                       const std::vector<Int>& preimage_counts) {
    if (r < 1 || e < 1) throw Error("BadInput", "zeta_alexander requires r, e >= 1");
    CycPoly p = CycPoly::factor(r.get_si(), 2) *
                CycPoly::factor(e.get_si(), static_cast<long>(-chi_open.get_si()));
    for (const auto& mu : preimage_counts) {
        if (mu < 1) throw Error("BadInput", "preimage counts must be >= 1");
        p /= CycPoly::factor(mu.get_si(), 1);
    }
    return p;
}

}  // namespace rnfq
