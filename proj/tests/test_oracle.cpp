#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aupoint/oracle.hpp"
#include "aupoint/randgen.hpp"

using namespace aupoint;

namespace {

// Independent second route: plain recursive descent, no memo table.
bool naive_member(const Regex& r, std::string_view w) {
    switch (r->op) {
        case RegexOp::Empty:
            return false;
        case RegexOp::Epsilon:
            return w.empty();
        case RegexOp::Sym:
            return w.size() == 1 && w[0] == r->sym;
        case RegexOp::Sum:
            return naive_member(r->left, w) || naive_member(r->right, w);
        case RegexOp::Cat:
            for (std::size_t i = 0; i <= w.size(); ++i) {
                if (naive_member(r->left, w.substr(0, i)) && naive_member(r->right, w.substr(i)))
                    return true;
            }
            return false;
        case RegexOp::Star:
            if (w.empty()) return true;
            for (std::size_t i = 1; i <= w.size(); ++i) {
                if (naive_member(r->left, w.substr(0, i)) && naive_member(r, w.substr(i)))
                    return true;
            }
            return false;
    }
    return false;
}

}  // namespace

TEST_CASE("membership examples") {
    Regex r = parse("(a+\\e)(b*a+b)b");
    CHECK(member_oracle(r, "ab"));
    CHECK_FALSE(member_oracle(r, ""));
    CHECK(member_oracle(parse("a"), "a"));
    CHECK_FALSE(member_oracle(parse("a"), "aa"));
    CHECK(member_oracle(parse("(a*)*"), "aaaa"));
    CHECK(member_oracle(parse("(\\e+a)*"), ""));
}

TEST_CASE("language enumeration") {
    LanguageSample s = enumerate_language(parse("b(a+b)*"), 2);
    CHECK(s.words == std::vector<std::string>{"b", "ba", "bb"});
    CHECK(enumerate_language(parse("\\0"), 5).words.empty());
    CHECK(enumerate_language(parse("\\e"), 3).words == std::vector<std::string>{""});
    CHECK_THROWS_AS(enumerate_language(parse("a"), 13), std::invalid_argument);
}

TEST_CASE("bounded language equality") {
    CHECK(same_language_up_to(parse("a+b"), parse("b+a"), 6));
    CHECK(same_language_up_to(parse("a*"), parse("\\e+aa*"), 6));
    CHECK_FALSE(same_language_up_to(parse("a"), parse("b"), 1));
}

TEST_CASE("empty word membership equals nullable") {
    RegexGen gen(3, "abc");
    for (int i = 0; i < 400; ++i) {
        Regex r = gen.next_regex(8);
        CHECK(member_oracle(r, "") == nullable(r));
    }
}

TEST_CASE("memoized and naive oracles agree") {
    RegexGen gen(5, "ab");
    for (int i = 0; i < 200; ++i) {
        Regex r = gen.next_regex(6);
        for (int j = 0; j < 20; ++j) {
            std::string w = gen.next_word(4);
            CHECK(member_oracle(r, w) == naive_member(r, w));
        }
    }
}
