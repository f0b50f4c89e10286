#include "aupoint/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "nlohmann/json.hpp"

#include "aupoint/derivatives.hpp"
#include "aupoint/pointed.hpp"
#include "aupoint/readback.hpp"

namespace aupoint {

std::vector<int> Dfa::finals() const {
    std::vector<int> out;
    for (int i = 0; i < num_states(); ++i) {
        if (final_states[i]) out.push_back(i);
    }
    return out;
}

bool run_dfa(const Dfa& d, std::string_view w) {
    int state = d.start;
    for (char a : w) {
        auto it = std::find(d.alphabet.begin(), d.alphabet.end(), a);
        if (it == d.alphabet.end()) return false;  // implicit dead state
        state = d.trans[state][it - d.alphabet.begin()];
    }
    return d.final_states[state];
}

namespace {

struct PreLess {
    bool operator()(const Pre& a, const Pre& b) const { return compare(a, b) < 0; }
};

// Worklist closure from the broadcast start state. state_key dynamically
// picks the representative: structural identity for the plain construction,
// canonical read-back for the quotient.
template <typename KeyFn>
Dfa build_from_pres(const Regex& r, const char* construction, KeyFn state_key) {
    Dfa dfa;
    dfa.source = render(r);
    dfa.construction = construction;
    std::string alphabet = symbols_of(r);
    dfa.alphabet.assign(alphabet.begin(), alphabet.end());

    std::map<std::string, int> index;
    std::deque<Pre> worklist;
    auto state_of = [&](const Pre& p) {
        std::string key = state_key(p);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(dfa.labels.size());
        index.emplace(std::move(key), id);
        dfa.labels.push_back(render(p));
        dfa.final_states.push_back(p.fin);
        dfa.trans.emplace_back(alphabet.size(), -1);
        worklist.push_back(p);
        return id;
    };

    dfa.start = state_of(broadcast(embed(r)));
    while (!worklist.empty()) {
        Pre p = worklist.front();
        worklist.pop_front();
        int from = index.at(state_key(p));
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            dfa.trans[from][i] = state_of(move(p, alphabet[i]));
        }
    }
    return dfa;
}

}  // namespace

Dfa build_pointed_dfa(const Regex& r) {
    return build_from_pres(r, "pointed", [](const Pre& p) { return render(p); });
}

Dfa build_quotient_dfa(const Regex& r) {
    return build_from_pres(r, "quotient",
                           [](const Pre& p) { return render(canon_set(readback(p))); });
}

Dfa build_derivative_quotient_dfa(const Regex& r, int max_states) {
    if (max_states < 1) throw std::invalid_argument("max_states must be at least 1");
    Dfa dfa;
    dfa.source = render(r);
    dfa.construction = "derivative-quotient";
    std::string alphabet = symbols_of(r);
    dfa.alphabet.assign(alphabet.begin(), alphabet.end());

    std::map<std::string, int> index;
    std::deque<Regex> worklist;
    auto state_of = [&](const Regex& d) {
        std::string key = render(canon_set(nf_eps(d)));
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(dfa.labels.size());
        if (id >= max_states) throw std::runtime_error("derivative state budget exceeded");
        index.emplace(std::move(key), id);
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
        int from = index.at(render(canon_set(nf_eps(d))));
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            dfa.trans[from][i] = state_of(canon(derive_char(d, alphabet[i])));
        }
    }
    return dfa;
}

Dfa minimize(const Dfa& d) {
    const int n = d.num_states();
    const int k = static_cast<int>(d.alphabet.size());
    std::vector<int> block(n);
    for (int i = 0; i < n; ++i) block[i] = d.final_states[i] ? 1 : 0;

    for (;;) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(block[i]);
            for (int a = 0; a < k; ++a) sig.push_back(block[d.trans[i][a]]);
            auto [it, _] = sig_index.try_emplace(std::move(sig),
                                                 static_cast<int>(sig_index.size()));
            next[i] = it->second;
        }
        bool stable = static_cast<int>(sig_index.size()) ==
                      *std::max_element(block.begin(), block.end()) + 1;
        block = std::move(next);
        if (stable) break;
    }

    int blocks = *std::max_element(block.begin(), block.end()) + 1;
    Dfa out;
    out.source = d.source;
    out.construction = "minimized";
    out.alphabet = d.alphabet;
    out.labels.assign(blocks, "");
    out.final_states.assign(blocks, false);
    out.trans.assign(blocks, std::vector<int>(k, -1));
    out.start = block[d.start];
    for (int i = 0; i < n; ++i) {
        int b = block[i];
        if (out.labels[b].empty()) out.labels[b] = d.labels[i];
        out.final_states[b] = d.final_states[i];
        for (int a = 0; a < k; ++a) out.trans[b][a] = block[d.trans[i][a]];
    }
    return out;
}

namespace {

// Renumber states by BFS discovery order from the start; two accessible
// complete DFAs are isomorphic iff the renumbered tables coincide.
std::pair<std::vector<int>, bool> bfs_order(const Dfa& d) {
    const int n = d.num_states();
    std::vector<int> order(n, -1);
    std::deque<int> queue;
    int seen = 0;
    order[d.start] = seen++;
    queue.push_back(d.start);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : d.trans[s]) {
            if (order[t] == -1) {
                order[t] = seen++;
                queue.push_back(t);
            }
        }
    }
    return {order, seen == n};
}

}  // namespace

bool isomorphic(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw std::invalid_argument("alphabet mismatch");
    if (d1.num_states() != d2.num_states()) return false;
    auto [o1, all1] = bfs_order(d1);
    auto [o2, all2] = bfs_order(d2);
    if (!all1 || !all2) throw std::invalid_argument("automata must be accessible");

    const int n = d1.num_states();
    const int k = static_cast<int>(d1.alphabet.size());
    std::vector<int> inv1(n), inv2(n);
    for (int i = 0; i < n; ++i) {
        inv1[o1[i]] = i;
        inv2[o2[i]] = i;
    }
    for (int i = 0; i < n; ++i) {
        int s1 = inv1[i], s2 = inv2[i];
        if (d1.final_states[s1] != d2.final_states[s2]) return false;
        for (int a = 0; a < k; ++a) {
            if (o1[d1.trans[s1][a]] != o2[d2.trans[s2][a]]) return false;
        }
    }
    return true;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string export_dot(const Dfa& d) {
    std::string out = "digraph dfa {\n  rankdir=LR;\n";
    out += "  __start [shape=point];\n";
    out += "  __start -> q" + std::to_string(d.start) + ";\n";
    for (int i = 0; i < d.num_states(); ++i) {
        out += "  q" + std::to_string(i) + " [shape=" +
               (d.final_states[i] ? "doublecircle" : "circle") + " label=\"" +
               dot_escape(d.labels[i]) + "\"];\n";
    }
    for (int i = 0; i < d.num_states(); ++i) {
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            out += "  q" + std::to_string(i) + " -> q" + std::to_string(d.trans[i][a]) +
                   " [label=\"" + std::string(1, d.alphabet[a]) + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

std::string export_json(const Dfa& d) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["source"] = d.source;
    j["construction"] = d.construction;
    j["alphabet"] = nlohmann::ordered_json::array();
    for (char c : d.alphabet) j["alphabet"].push_back(std::string(1, c));
    j["states"] = nlohmann::ordered_json::array();
    for (int i = 0; i < d.num_states(); ++i) {
        j["states"].push_back({{"index", i},
                               {"label", d.labels[i]},
                               {"final", static_cast<bool>(d.final_states[i])}});
    }
    j["start"] = d.start;
    j["transitions"] = nlohmann::ordered_json::array();
    for (int i = 0; i < d.num_states(); ++i) {
        for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
            j["transitions"].push_back({{"from", i},
                                        {"symbol", std::string(1, d.alphabet[a])},
                                        {"to", d.trans[i][a]}});
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace aupoint
