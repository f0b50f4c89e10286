#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aupoint/syntax.hpp"

namespace aupoint {

/// Complete, accessible DFA over the symbols occurring in the source regex.
/// trans[state][i] follows alphabet[i]; symbols outside the alphabet reject.
struct Dfa {
    std::string source;        // concrete syntax of the regex it was built from
    std::string construction;  // pointed | quotient | derivative | derivative-quotient | minimized
    std::vector<char> alphabet;
    std::vector<std::string> labels;
    int start = 0;
    std::vector<bool> final_states;
    std::vector<std::vector<int>> trans;

    int num_states() const { return static_cast<int>(labels.size()); }
    std::vector<int> finals() const;
};

bool run_dfa(const Dfa& d, std::string_view w);

/// Worklist closure of move from the broadcast start state, one state per
/// structurally distinct pre.
Dfa build_pointed_dfa(const Regex& r);

/// Same closure, but pres with equal canonical read-back collapse to one
/// representative state.
Dfa build_quotient_dfa(const Regex& r);

/// Derivative worklist where derivatives with equal canonical nf_eps collapse.
Dfa build_derivative_quotient_dfa(const Regex& r, int max_states = 4096);

/// Moore partition refinement from the final/non-final split.
Dfa minimize(const Dfa& d);

/// Start/final/transition-preserving bijection test via canonical BFS
/// numbering. Throws std::invalid_argument on alphabet mismatch.
bool isomorphic(const Dfa& d1, const Dfa& d2);

std::string export_dot(const Dfa& d);
std::string export_json(const Dfa& d);

}  // namespace aupoint
