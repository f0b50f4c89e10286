#pragma once

#include <string_view>
#include <vector>

#include "aupoint/syntax.hpp"

namespace aupoint {

/// Canonically ordered, duplicate-free set of regexes, read additively.
class RegexSet {
  public:
    RegexSet() = default;
    explicit RegexSet(std::vector<Regex> elems);

    void insert(const Regex& r);
    void merge(const RegexSet& other);

    const std::vector<Regex>& elems() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    bool contains(const Regex& r) const;

    bool operator==(const RegexSet& other) const;

  private:
    std::vector<Regex> elems_;  // sorted by structural compare
};

std::string render(const RegexSet& s);

/// { e'r | e' in s }
RegexSet set_concat_right(const RegexSet& s, const Regex& r);

/// The set of plain regexes a pointed item denotes; no element is nullable.
RegexSet readback(const Item& e);
RegexSet readback(const Pre& p);

/// Look-ahead normal form; nf_eps adds ε exactly when the source is nullable.
RegexSet nf(const Regex& r);
RegexSet nf_eps(const Regex& r);
RegexSet nf_eps_set(const RegexSet& s);

/// ACI normal form of the sum at every depth plus right-nesting of
/// concatenation chains. No ∅/ε laws are applied.
Regex canon(const Regex& r);
RegexSet canon_set(const RegexSet& s);

/// Membership in Lp via read-back; |w| is capped like the enumeration oracle.
bool lp_member(const Pre& p, std::string_view w);

}  // namespace aupoint
