#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lspace/alexander.hpp"

namespace lspace::corpus {

/// Positive Hopf link, lk = 1, Delta = 1.
LinkData hopf();
/// Negative Hopf link, lk = -1.
LinkData negative_hopf();
/// T(2,2n), lk = n, Delta = ((xy)^n - 1)/(xy - 1) centered.
LinkData torus(std::int64_t n);
/// Two-component unlink: Delta = 0, unknotted components.
LinkData unlink();
/// The two-bridge link b(4n^2+4n, -2n-1); n = 1 is the Whitehead link.
LinkData two_bridge_ln(std::int64_t n);
LinkData whitehead();
/// L7n2: unknot and right-handed trefoil, lk = 0, Delta = (x-1)(y-1)/sqrt(xy).
LinkData l7n2();
/// Coefficients of the 3-component polynomial of the mirror of L7a7.
std::vector<std::int64_t> l7a7_mirror_coefficients();

/// Lookup by name: "hopf", "hopf-", "unlink", "whitehead", "l7n2", "t2,2n" (e.g. "t2,6"), "ln:3".
LinkData by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace lspace::corpus
