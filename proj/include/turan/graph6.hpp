#pragma once

#include <string>
#include <string_view>

#include "turan/graph.hpp"

namespace turan {

/// Standard graph6, single size byte only (order at most 62).
std::string graph6_encode(const SmallGraph& g);

/// Inverse of graph6_encode. Throws Graph6Error on bytes outside 63..126,
/// the multi-byte size form, a payload of the wrong length, or nonzero
/// padding bits.
SmallGraph graph6_decode(std::string_view text);

/// Graph from a command-line style spec: `g6:<graph6>` or a builtin name
/// (K4, C5, P4, I3, W5, S3, K33, K_12, T5,2, petersen, bowtie, friendship3).
SmallGraph parse_graph_spec(std::string_view spec);

}  // namespace turan
