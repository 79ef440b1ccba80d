#pragma once

#include <string>
#include <vector>

#include "rnfq/surfacecover.hpp"

namespace rnfq {

struct FixtureCheck {
    std::string group;
    std::string name;
    bool pass;
    std::string expected;
    std::string actual;
};

// Replays the documented example computations.  An empty filter runs every
// group; otherwise only the named group.  Unknown names raise an Error whose
// message lists the available groups.
std::vector<FixtureCheck> run_fixtures(const std::string& group_filter = "");

std::vector<std::string> fixture_groups();

}  // namespace rnfq
