#pragma once

#include <json.hpp>

#include "rnfq/leyomdin.hpp"

namespace rnfq {

using json = nlohmann::ordered_json;

// Rationals travel as canonical "num/den" strings, integers as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise.
json int_to_json(const Int& v);
Int int_from_json(const json& j);
json rat_to_json(const Rat& v);

json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const json& j);

json cycpoly_to_json(const CycPoly& p);

FakeQuadric surface_from_json(const json& j);
json surface_to_json(const FakeQuadric& S);

json canonical_class_to_json(const CanonicalClass& c);
json lattice_point_to_json(const LatticePoint& l);
json betti_to_json(const BettiTriple& t);

json p1cover_to_json(const P1Cover& c);
P1Cover p1cover_from_json(const json& j);

CoverSpec coverspec_from_json(const json& j);
json eigen_report_to_json(const EigenReport& rep);
json split_report_to_json(const SplitReport& rep);

LYInput lyinput_from_json(const json& j);
json lyoutput_to_json(const LYOutput& out);

}  // namespace rnfq
