#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aupoint/oracle.hpp"
#include "aupoint/pointed.hpp"
#include "aupoint/randgen.hpp"
#include "aupoint/readback.hpp"

using namespace aupoint;

namespace {

Pre pre(const char* item_text, bool fin) { return {parse_item(item_text), fin}; }

bool pre_eq(const Pre& p, const char* item_text, bool fin) {
    return equal(p.item, parse_item(item_text)) && p.fin == fin;
}

}  // namespace

TEST_CASE("lifted sum") {
    CHECK(pre_eq(plus_lift(pre("a", false), pre("b", true)), "a+b", true));
    CHECK(pre_eq(plus_lift(pre("^a", false), pre("b", false)), "^a+b", false));
    CHECK(pre_eq(plus_lift(pre("a", true), pre("b", true)), "a+b", true));
}

TEST_CASE("lifted concatenation broadcasts through a finished first factor") {
    CHECK(pre_eq(cat_lift(pre("a", true), pre("b", false)), "a^b", false));
    CHECK(pre_eq(cat_lift(pre("^a", false), pre("b", false)), "(^a)b", false));
    CHECK(pre_eq(cat_lift(pre("a", true), pre("\\e", false)), "a\\e", true));
}

TEST_CASE("lifted star") {
    CHECK(pre_eq(star_lift(pre("a^b", false)), "(a^b)*", false));
    CHECK(pre_eq(star_lift(pre("ab", true)), "((^a)b)*", true));
    CHECK(pre_eq(star_lift(pre("\\e", true)), "\\e*", true));
}

TEST_CASE("broadcast examples") {
    CHECK(pre_eq(broadcast(embed(parse("(a+\\e)(b*a+b)b"))),
                 "(^a+\\e)((^b)*^a+^b)b", false));
    CHECK(pre_eq(broadcast(item_epsilon()), "\\e", true));
    CHECK(pre_eq(broadcast(embed(parse("a*"))), "(^a)*", true));
}

TEST_CASE("broadcast on pres") {
    CHECK(pre_eq(broadcast(pre("a", true)), "^a", true));
    CHECK(pre_eq(broadcast(pre("^a", false)), "^a", false));
    Pre b = broadcast(embed(parse("(ac+bc)*")));
    CHECK(equal(broadcast(b), b));
}

TEST_CASE("move examples") {
    Pre start = broadcast(embed(parse("(a+\\e)(b*a+b)b")));
    Pre after_a = move(start, 'a');
    CHECK(pre_eq(after_a, "(a+\\e)((^b)*^a+^b)^b", false));
    // second worked example: the same start pre moved on b
    Pre after_b = move(start, 'b');
    CHECK(pre_eq(after_b, "(a+\\e)((^b)*^a+b)^b", false));
    CHECK(pre_eq(move(parse_item("^a"), 'b'), "a", false));
    CHECK(pre_eq(move(parse_item("^a"), 'a'), "a", true));
}

TEST_CASE("move_star folds moves") {
    Pre p = broadcast(embed(parse("(a+\\e)(b*a+b)b")));
    CHECK(equal(move_star(p, ""), p));
    CHECK(is_final(move_star(p, "ab")));
    CHECK_FALSE(is_final(move_star(p, "a")));
    CHECK(pre_eq(move_star(broadcast(embed(parse("a"))), "b"), "a", false));
}

TEST_CASE("is_final reads the trailing flag") {
    CHECK(is_final(pre("a", true)));
    CHECK_FALSE(is_final(pre("^a", false)));
    CHECK(is_final(broadcast(embed(parse("a*")))));
}

TEST_CASE("carrier preservation under broadcast and move") {
    RegexGen gen(21, "abc");
    for (int i = 0; i < 300; ++i) {
        Item e = gen.next_item(8);
        CHECK(equal(carrier(broadcast(e)), carrier(e)));
        Pre p{e, gen.pick(2) == 0};
        char a = "abc"[gen.pick(3)];
        CHECK(equal(carrier(move(p, a)), carrier(p)));
    }
}

TEST_CASE("broadcast is idempotent") {
    RegexGen gen(22, "abc");
    for (int i = 0; i < 300; ++i) {
        Pre b = broadcast(gen.next_item(8));
        CHECK(equal(broadcast(b), b));
    }
}

TEST_CASE("broadcast flag equals nullability") {
    RegexGen gen(23, "abc");
    for (int i = 0; i < 300; ++i) {
        Regex r = gen.next_regex(8);
        CHECK(broadcast(embed(r)).fin == nullable(r));
    }
}

TEST_CASE("broadcast distributes over the lifted constructors") {
    RegexGen gen(24, "ab");
    for (int i = 0; i < 300; ++i) {
        Pre p1{gen.next_item(5), gen.pick(2) == 0};
        Pre p2{gen.next_item(5), gen.pick(2) == 0};
        CHECK(equal(broadcast(plus_lift(p1, p2)), plus_lift(broadcast(p1), broadcast(p2))));
        CHECK(equal(broadcast(cat_lift(p1, p2)), cat_lift(broadcast(p1), p2)));
    }
}

TEST_CASE("moving a point consumes one symbol of the language") {
    RegexGen gen(25, "ab");
    for (int i = 0; i < 120; ++i) {
        Item e = gen.next_item(6);
        char a = "ab"[gen.pick(2)];
        for (int j = 0; j < 12; ++j) {
            std::string w = gen.next_word(4);
            CHECK(lp_member(move(e, a), w) == lp_member(Pre{e, false}, a + w));
        }
    }
}

TEST_CASE("broadcast adds exactly the expression's own language") {
    RegexGen gen(26, "ab");
    for (int i = 0; i < 120; ++i) {
        Item e = gen.next_item(6);
        for (int j = 0; j < 12; ++j) {
            std::string w = gen.next_word(5);
            bool lhs = lp_member(broadcast(e), w);
            bool rhs = lp_member(Pre{e, false}, w) || member_oracle(carrier(e), w);
            CHECK(lhs == rhs);
        }
    }
}
