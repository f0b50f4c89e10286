#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aupoint/merge.hpp"
#include "aupoint/pointed.hpp"
#include "aupoint/randgen.hpp"
#include "aupoint/readback.hpp"

using namespace aupoint;

namespace {

struct SameCarrierPair {
    Pre p1;
    Pre p2;
};

SameCarrierPair random_pair(RegexGen& gen, int max_leaves) {
    Regex r = gen.next_regex(max_leaves);
    return {{gen.pointing_of(r), gen.pick(2) == 0}, {gen.pointing_of(r), gen.pick(2) == 0}};
}

}  // namespace

TEST_CASE("merge examples") {
    CHECK(equal(merge_items(parse_item("^a"), parse_item("a")), parse_item("^a")));
    CHECK(equal(merge_items(parse_item("(a^c+bc)*"), parse_item("(ac+b^c)*")),
                parse_item("(a^c+b^c)*")));
    CHECK_THROWS_AS(merge_items(parse_item("a"), parse_item("b")), CarrierMismatchError);
    CHECK_THROWS_AS(merge_items(parse_item("ab"), parse_item("a+b")), CarrierMismatchError);
}

TEST_CASE("merge of pres joins flags") {
    Pre a_true{parse_item("a"), true};
    Pre a_false{parse_item("a"), false};
    Pre pa_false{parse_item("^a"), false};
    CHECK(equal(merge_pres(a_true, a_false), Pre{parse_item("a"), true}));
    CHECK(equal(merge_pres(pa_false, a_false), pa_false));
}

TEST_CASE("merge is commutative, associative, idempotent") {
    RegexGen gen(51, "abc");
    for (int i = 0; i < 300; ++i) {
        Regex r = gen.next_regex(8);
        Pre p1{gen.pointing_of(r), gen.pick(2) == 0};
        Pre p2{gen.pointing_of(r), gen.pick(2) == 0};
        Pre p3{gen.pointing_of(r), gen.pick(2) == 0};
        CHECK(equal(merge_pres(p1, p2), merge_pres(p2, p1)));
        CHECK(equal(merge_pres(merge_pres(p1, p2), p3), merge_pres(p1, merge_pres(p2, p3))));
        CHECK(equal(merge_pres(p1, p1), p1));
    }
}

TEST_CASE("merge is additive on languages") {
    RegexGen gen(52, "ab");
    for (int i = 0; i < 150; ++i) {
        auto [p1, p2] = random_pair(gen, 6);
        for (int j = 0; j < 10; ++j) {
            std::string w = gen.next_word(5);
            CHECK(lp_member(merge_pres(p1, p2), w) == (lp_member(p1, w) || lp_member(p2, w)));
        }
    }
}

TEST_CASE("merge commutes with the lifted constructors") {
    RegexGen gen(53, "ab");
    for (int i = 0; i < 250; ++i) {
        auto [p11, p21] = random_pair(gen, 5);
        auto [p12, p22] = random_pair(gen, 5);
        CHECK(equal(plus_lift(merge_pres(p11, p21), merge_pres(p12, p22)),
                    merge_pres(plus_lift(p11, p12), plus_lift(p21, p22))));
        CHECK(equal(cat_lift(merge_pres(p11, p21), merge_pres(p12, p22)),
                    merge_pres(cat_lift(p11, p12), cat_lift(p21, p22))));
        CHECK(equal(star_lift(merge_pres(p11, p21)),
                    merge_pres(star_lift(p11), star_lift(p21))));
    }
}

TEST_CASE("merge commutes with broadcast") {
    RegexGen gen(54, "ab");
    for (int i = 0; i < 250; ++i) {
        auto [p1, p2] = random_pair(gen, 6);
        Pre merged = broadcast(merge_pres(p1, p2));
        CHECK(equal(merged, merge_pres(broadcast(p1), p2)));
        CHECK(equal(merged, merge_pres(p1, broadcast(p2))));
        CHECK(equal(merged, merge_pres(broadcast(p1), broadcast(p2))));
    }
}

TEST_CASE("merge commutes with move") {
    RegexGen gen(55, "ab");
    for (int i = 0; i < 250; ++i) {
        auto [p1, p2] = random_pair(gen, 6);
        for (char a : {'a', 'b'}) {
            CHECK(equal(move(merge_pres(p1, p2), a),
                        merge_pres(move(p1, a), move(p2, a))));
        }
    }
}
