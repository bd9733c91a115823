#pragma once

#include <string>

#include "lspace/alexander.hpp"

namespace lspace {

/// Link descriptor JSON:
///   {"name": "...", "lk": 1, "delta": [[2i, 2j, c], ...],
///    "delta_c1": [[2k, c], ...], "delta_c2": [[2k, c], ...]}
/// Exponents are doubled so the file stays integer-only. Component polynomials are optional
/// when lk != 0 (derived by the Torres formula) and required when lk = 0.
LinkData parse_link_json(const std::string& text);
LinkData parse_link_file(const std::string& path);

/// Normalized descriptor, components included. parse(serialize(x)) == x.
std::string serialize_link(const LinkData& link);

}  // namespace lspace
