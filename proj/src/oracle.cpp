#include "aupoint/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace aupoint {

namespace {

struct Matcher {
    std::string_view word;
    std::map<std::tuple<const RegexNode*, std::size_t, std::size_t>, bool> memo;

    bool match(const Regex& r, std::size_t begin, std::size_t end) {
        auto key = std::make_tuple(r.get(), begin, end);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool result = compute(r, begin, end);
        memo.emplace(key, result);
        return result;
    }

    bool compute(const Regex& r, std::size_t begin, std::size_t end) {
        switch (r->op) {
            case RegexOp::Empty:
                return false;
            case RegexOp::Epsilon:
                return begin == end;
            case RegexOp::Sym:
                return end == begin + 1 && word[begin] == r->sym;
            case RegexOp::Sum:
                return match(r->left, begin, end) || match(r->right, begin, end);
            case RegexOp::Cat:
                for (std::size_t mid = begin; mid <= end; ++mid) {
                    if (match(r->left, begin, mid) && match(r->right, mid, end)) return true;
                }
                return false;
            case RegexOp::Star:
                if (begin == end) return true;
                // first factor nonempty, so the recursion terminates
                for (std::size_t mid = begin + 1; mid <= end; ++mid) {
                    if (match(r->left, begin, mid) && match(r, mid, end)) return true;
                }
                return false;
        }
        return false;
    }
};

}  // namespace

bool member_oracle(const Regex& r, std::string_view w) {
    Matcher m{w, {}};
    return m.match(r, 0, w.size());
}

LanguageSample enumerate_language(const Regex& r, int max_len) {
    return enumerate_language(r, max_len, symbols_of(r));
}

LanguageSample enumerate_language(const Regex& r, int max_len, std::string_view alphabet) {
    if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
    if (max_len > kMaxEnumerationLength)
        throw std::invalid_argument("max_len exceeds enumeration limit");
    std::string sorted(alphabet);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    LanguageSample sample;
    sample.max_len = max_len;
    std::string word;
    auto visit = [&](auto&& self) -> void {
        if (member_oracle(r, word)) sample.words.push_back(word);
        if (static_cast<int>(word.size()) == max_len) return;
        for (char c : sorted) {
            word.push_back(c);
            self(self);
            word.pop_back();
        }
    };
    visit(visit);
    std::stable_sort(sample.words.begin(), sample.words.end(),
                     [](const std::string& a, const std::string& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return sample;
}

bool same_language_up_to(const Regex& r1, const Regex& r2, int max_len) {
    std::string alphabet = symbols_of(r1) + symbols_of(r2);
    return enumerate_language(r1, max_len, alphabet) ==
           enumerate_language(r2, max_len, alphabet);
}

}  // namespace aupoint
