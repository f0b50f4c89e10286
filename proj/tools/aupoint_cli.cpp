// Command-line frontend: compile, match, trace, compare, gen.
// Exit codes: 0 accept/success, 1 reject/mismatch, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "aupoint/automata.hpp"
#include "aupoint/derivatives.hpp"
#include "aupoint/oracle.hpp"
#include "aupoint/pointed.hpp"
#include "aupoint/randgen.hpp"
#include "aupoint/readback.hpp"

using namespace aupoint;

namespace {

Dfa build(const Regex& r, const std::string& construction) {
    if (construction == "pointed") return build_pointed_dfa(r);
    if (construction == "quotient") return build_quotient_dfa(r);
    if (construction == "derivative") return build_derivative_dfa(r);
    return build_derivative_quotient_dfa(r);
}

int cmd_compile(const std::string& regex_text, const std::string& construction,
                bool minimize_flag, const std::string& format) {
    Dfa d = build(parse(regex_text), construction);
    if (minimize_flag) d = minimize(d);
    std::cout << (format == "json" ? export_json(d) : export_dot(d));
    return 0;
}

int cmd_match(const std::string& regex_text, const std::string& word,
              const std::string& engine) {
    Regex r = parse(regex_text);
    bool accept;
    if (engine == "oracle") {
        accept = member_oracle(r, word);
    } else if (engine == "derivative") {
        accept = derivative_match(r, word);
    } else {
        accept = is_final(move_star(broadcast(embed(r)), word));
    }
    std::cout << (accept ? "accept" : "reject") << "\n";
    return accept ? 0 : 1;
}

int cmd_trace(const std::string& regex_text, const std::string& word) {
    Regex r = parse(regex_text);
    Pre p = broadcast(embed(r));
    std::cout << render(p) << "\n";
    for (char a : word) {
        p = move(p, a);
        std::cout << render(p) << "\n";
    }
    std::cout << (is_final(p) ? "ACCEPT" : "REJECT") << "\n";
    return is_final(p) ? 0 : 1;
}

int cmd_compare(const std::string& regex_text, int max_len) {
    if (max_len > 8) {
        std::cerr << "error: max word length capped at 8\n";
        return 2;
    }
    Regex r = parse(regex_text);
    Dfa pointed = build_pointed_dfa(r);
    Dfa quotient = build_quotient_dfa(r);
    Dfa deriv = build_derivative_dfa(r);
    Dfa deriv_quot = build_derivative_quotient_dfa(r);
    std::cout << "pointed states: " << pointed.num_states() << "\n";
    std::cout << "quotient states: " << quotient.num_states() << "\n";
    std::cout << "derivative states: " << deriv.num_states() << "\n";
    std::cout << "derivative-quotient states: " << deriv_quot.num_states() << "\n";

    bool ok = true;
    std::string alphabet = symbols_of(r);
    std::string word;
    auto check_all = [&](auto&& self) -> bool {
        bool expected = member_oracle(r, word);
        if (run_dfa(pointed, word) != expected || run_dfa(quotient, word) != expected ||
            run_dfa(deriv, word) != expected || run_dfa(deriv_quot, word) != expected ||
            derivative_match(r, word) != expected) {
            std::cout << "disagreement on word \"" << word << "\"\n";
            return false;
        }
        if (static_cast<int>(word.size()) == max_len) return true;
        for (char c : alphabet) {
            word.push_back(c);
            bool r2 = self(self);
            word.pop_back();
            if (!r2) return false;
        }
        return true;
    };
    ok = check_all(check_all);

    bool iso = isomorphic(quotient, deriv_quot);
    std::cout << "quotients isomorphic: " << (iso ? "yes" : "no") << "\n";
    ok = ok && iso;
    std::cout << (ok ? "OK" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_gen(std::uint64_t seed, int count, int max_leaves, const std::string& alphabet) {
    RegexGen gen(seed, alphabet);
    for (int i = 0; i < count; ++i) std::cout << render(gen.next_regex(max_leaves)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointed regular expression engine"};
    app.require_subcommand(1);

    std::string regex_text, word, construction = "pointed", format = "dot",
                engine = "pointed", alphabet = "abc";
    bool minimize_flag = false;
    int max_len = 6, count = 10, max_leaves = 8;
    std::uint64_t seed = 1;

    auto* compile = app.add_subcommand("compile", "build an automaton and print it");
    compile->add_option("regex", regex_text)->required();
    compile->add_option("--construction", construction)
        ->check(CLI::IsMember({"pointed", "quotient", "derivative", "derivative-quotient"}));
    compile->add_flag("--minimize", minimize_flag);
    compile->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* match = app.add_subcommand("match", "test a word against a regex");
    match->add_option("regex", regex_text)->required();
    match->add_option("word", word);
    match->add_option("--engine", engine)
        ->check(CLI::IsMember({"pointed", "derivative", "oracle"}));

    auto* trace = app.add_subcommand("trace", "step the point through a word");
    trace->add_option("regex", regex_text)->required();
    trace->add_option("word", word);

    auto* compare = app.add_subcommand("compare", "cross-check all constructions");
    compare->add_option("regex", regex_text)->required();
    compare->add_option("maxlen", max_len);

    auto* gen = app.add_subcommand("gen", "emit a reproducible regex corpus");
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--max-leaves", max_leaves)->check(CLI::PositiveNumber);
    gen->add_option("--alphabet", alphabet);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compile->parsed()) return cmd_compile(regex_text, construction, minimize_flag, format);
        if (match->parsed()) return cmd_match(regex_text, word, engine);
        if (trace->parsed()) return cmd_trace(regex_text, word);
        if (compare->parsed()) return cmd_compare(regex_text, max_len);
        if (gen->parsed()) return cmd_gen(seed, count, max_leaves, alphabet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
