#pragma once

#include <string_view>

#include "aupoint/automata.hpp"
#include "aupoint/readback.hpp"
#include "aupoint/syntax.hpp"

namespace aupoint {

/// Raw syntactic Brzozowski derivative, no simplification.
Regex derive_char(const Regex& r, char a);

/// Left fold of derive_char over w.
Regex derive_word(const Regex& r, std::string_view w);

RegexSet derive_set(const RegexSet& s, char a);

/// nullable after the word derivative; canon between steps bounds growth.
bool derivative_match(const Regex& r, std::string_view w);

/// States are canon forms of reachable derivatives; finals are the nullable
/// ones. The budget guards against a broken canon, not against theory.
Dfa build_derivative_dfa(const Regex& r, int max_states = 4096);

}  // namespace aupoint
