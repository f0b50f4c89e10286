#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "aupoint/syntax.hpp"

namespace aupoint {

/// Seeded pseudo-random regexes, items and words for property suites and
/// the CLI corpus generator. Deterministic for a fixed seed.
class RegexGen {
  public:
    RegexGen(std::uint64_t seed, std::string alphabet = "abc")
        : rng_(seed), alphabet_(std::move(alphabet)) {}

    Regex next_regex(int max_leaves);

    /// A random pointing of r: each symbol leaf gains a point with the
    /// given per-mille probability.
    Item pointing_of(const Regex& r, int point_per_mille = 300);

    Item next_item(int max_leaves, int point_per_mille = 300) {
        return pointing_of(next_regex(max_leaves), point_per_mille);
    }

    std::string next_word(int max_len);

    /// An ACI-equal reshuffling: summand chains permuted, reassociated and
    /// possibly duplicated, at every depth.
    Regex reshuffle_aci(const Regex& r);

    std::uint64_t pick(std::uint64_t bound) { return rng_() % bound; }

  private:
    std::mt19937_64 rng_;
    std::string alphabet_;

    Regex gen(int leaves);
};

}  // namespace aupoint
