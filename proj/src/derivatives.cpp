#include "aupoint/derivatives.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace aupoint {

Regex derive_char(const Regex& r, char a) {
    switch (r->op) {
        case RegexOp::Empty:
        case RegexOp::Epsilon:
            return empty_set();
        case RegexOp::Sym:
            return r->sym == a ? epsilon() : empty_set();
        case RegexOp::Sum:
            return sum(derive_char(r->left, a), derive_char(r->right, a));
        case RegexOp::Cat:
            if (nullable(r->left)) {
                return sum(cat(derive_char(r->left, a), r->right), derive_char(r->right, a));
            }
            return cat(derive_char(r->left, a), r->right);
        case RegexOp::Star:
            return cat(derive_char(r->left, a), r);
    }
    return empty_set();
}

Regex derive_word(const Regex& r, std::string_view w) {
    Regex d = r;
    for (char a : w) d = derive_char(d, a);
    return d;
}

RegexSet derive_set(const RegexSet& s, char a) {
    std::vector<Regex> out;
    out.reserve(s.size());
    for (const Regex& r : s.elems()) out.push_back(derive_char(r, a));
    return RegexSet(std::move(out));
}

bool derivative_match(const Regex& r, std::string_view w) {
    Regex d = canon(r);
    for (char a : w) d = canon(derive_char(d, a));
    return nullable(d);
}

Dfa build_derivative_dfa(const Regex& r, int max_states) {
    if (max_states < 1) throw std::invalid_argument("max_states must be at least 1");
    Dfa dfa;
    dfa.source = render(r);
    dfa.construction = "derivative";
    std::string alphabet = symbols_of(r);
    dfa.alphabet.assign(alphabet.begin(), alphabet.end());

    std::map<Regex, int, RegexLess> index;
    std::deque<Regex> worklist;
    auto state_of = [&](const Regex& d) {
        auto it = index.find(d);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(dfa.labels.size());
        if (id >= max_states) throw std::runtime_error("derivative state budget exceeded");
        index.emplace(d, id);
        dfa.labels.push_back(render(d));
        dfa.final_states.push_back(nullable(d));
        dfa.trans.emplace_back(alphabet.size(), -1);
        worklist.push_back(d);
        return id;
    };

    dfa.start = state_of(canon(r));
    while (!worklist.empty()) {
        Regex d = worklist.front();
        worklist.pop_front();
        int from = index.at(d);
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            dfa.trans[from][i] = state_of(canon(derive_char(d, alphabet[i])));
        }
    }
    return dfa;
}

}  // namespace aupoint
