#pragma once

#include <string_view>

#include "aupoint/syntax.hpp"

namespace aupoint {

// Broadcasting of points, the lifted constructors and the move transition.
// broadcast is co-recursive with cat_lift and star_lift: traversing the end
// of a first factor (or a star body) re-broadcasts the point further right.

/// Injection of a plain regex as an item with no points.
Item embed(const Regex& r);

Pre plus_lift(const Pre& p1, const Pre& p2);
Pre cat_lift(const Pre& p1, const Pre& p2);
Pre star_lift(const Pre& p);

/// Propagates an initial point through the item (the syntactic ε-closure);
/// the flag signals that the point reached the very end.
Pre broadcast(const Item& e);
Pre broadcast(const Pre& p);

/// Points preceding `a` traverse it and re-broadcast; all other points are
/// erased. Total for every character.
Pre move(const Item& e, char a);
Pre move(const Pre& p, char a);

Pre move_star(Pre p, std::string_view w);

inline bool is_final(const Pre& p) { return p.fin; }

}  // namespace aupoint
