#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aupoint/syntax.hpp"

namespace aupoint {

// Ground-truth language semantics, deliberately naive. Everything else in
// the project is validated against this module, so it depends on nothing
// but the syntax trees.

struct LanguageSample {
    int max_len = 0;
    std::vector<std::string> words;  // length-then-lexicographic, no duplicates

    bool operator==(const LanguageSample&) const = default;
};

inline constexpr int kMaxEnumerationLength = 12;

/// True iff w is in L(r). Memoized split search over (subterm, substring);
/// star recursion only ever consumes a nonempty first factor.
bool member_oracle(const Regex& r, std::string_view w);

/// All members of L(r) up to max_len over the symbols occurring in r.
/// Throws std::invalid_argument when max_len exceeds kMaxEnumerationLength.
LanguageSample enumerate_language(const Regex& r, int max_len);
LanguageSample enumerate_language(const Regex& r, int max_len, std::string_view alphabet);

bool same_language_up_to(const Regex& r1, const Regex& r2, int max_len);

}  // namespace aupoint
