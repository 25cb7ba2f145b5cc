#pragma once

#include <string>

#include "mcc/io.hpp"

namespace mcc::fixtures {

inline const char* kFiveElement =
    "elements: 1 2 3 4 5\n"
    "imp: 1 3 -> 2\n"
    "imp: 1 2 -> 3\n"
    "imp: 2 3 -> 1\n"
    "imp: 4 -> 1\n"
    "edge: 3 4\n"
    "edge: 2 4\n"
    "edge: 2 5\n";

inline Instance five_element() { return parse_instance(kFiveElement); }

/// Labels -> set over the instance's ground set.
inline ElemSet S(const GroundSet& g, const std::string& labels) { return parse_set(g, labels); }

inline Instance simple(const std::string& text) { return parse_instance(text); }

}  // namespace mcc::fixtures
