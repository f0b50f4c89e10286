#pragma once

#include <stdexcept>

#include "aupoint/syntax.hpp"

namespace aupoint {

struct CarrierMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Pointwise union of points of two items over the same carrier, the
/// syntactic counterpart of the subset construction. Throws
/// CarrierMismatchError when the carriers differ.
Item merge_items(const Item& e1, const Item& e2);

/// Item merge plus flag disjunction.
Pre merge_pres(const Pre& p1, const Pre& p2);

}  // namespace aupoint
