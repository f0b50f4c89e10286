#include "aupoint/randgen.hpp"

#include <algorithm>
#include <vector>

namespace aupoint {

Regex RegexGen::gen(int leaves) {
    if (leaves <= 1) {
        switch (pick(8)) {
            case 0:
                return epsilon();
            case 1:
                return empty_set();
            default:
                return sym(alphabet_[pick(alphabet_.size())]);
        }
    }
    switch (pick(5)) {
        case 0:
        case 1: {
            int split = 1 + static_cast<int>(pick(leaves - 1));
            return sum(gen(split), gen(leaves - split));
        }
        case 2:
        case 3: {
            int split = 1 + static_cast<int>(pick(leaves - 1));
            return cat(gen(split), gen(leaves - split));
        }
        default:
            return star(gen(leaves - 1));
    }
}

Regex RegexGen::next_regex(int max_leaves) {
    int leaves = 1 + static_cast<int>(pick(std::max(1, max_leaves)));
    return gen(leaves);
}

Item RegexGen::pointing_of(const Regex& r, int point_per_mille) {
    switch (r->op) {
        case RegexOp::Empty:
            return item_empty_set();
        case RegexOp::Epsilon:
            return item_epsilon();
        case RegexOp::Sym:
            return pick(1000) < static_cast<std::uint64_t>(point_per_mille)
                       ? item_psym(r->sym)
                       : item_sym(r->sym);
        case RegexOp::Sum:
            return item_sum(pointing_of(r->left, point_per_mille),
                            pointing_of(r->right, point_per_mille));
        case RegexOp::Cat:
            return item_cat(pointing_of(r->left, point_per_mille),
                            pointing_of(r->right, point_per_mille));
        case RegexOp::Star:
            return item_star(pointing_of(r->left, point_per_mille));
    }
    return item_empty_set();
}

std::string RegexGen::next_word(int max_len) {
    std::string w;
    int len = static_cast<int>(pick(max_len + 1));
    for (int i = 0; i < len; ++i) w.push_back(alphabet_[pick(alphabet_.size())]);
    return w;
}

Regex RegexGen::reshuffle_aci(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
        case RegexOp::Epsilon:
        case RegexOp::Sym:
            return r;
        case RegexOp::Sum: {
            std::vector<Regex> parts;
            auto collect = [&](auto&& self, const Regex& e) -> void {
                if (e->op == RegexOp::Sum) {
                    self(self, e->left);
                    self(self, e->right);
                } else {
                    parts.push_back(reshuffle_aci(e));
                }
            };
            collect(collect, r);
            if (pick(3) == 0) parts.push_back(parts[pick(parts.size())]);  // idempotence
            for (std::size_t i = parts.size(); i > 1; --i)
                std::swap(parts[i - 1], parts[pick(i)]);
            // random reassociation
            while (parts.size() > 1) {
                std::size_t i = pick(parts.size() - 1);
                parts[i] = sum(parts[i], parts[i + 1]);
                parts.erase(parts.begin() + static_cast<long>(i) + 1);
            }
            return parts[0];
        }
        case RegexOp::Cat:
            return cat(reshuffle_aci(r->left), reshuffle_aci(r->right));
        case RegexOp::Star:
            return star(reshuffle_aci(r->left));
    }
    return r;
}

}  // namespace aupoint
