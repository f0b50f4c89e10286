#include "aupoint/readback.hpp"

#include <algorithm>
#include <stdexcept>

#include "aupoint/oracle.hpp"

namespace aupoint {

RegexSet::RegexSet(std::vector<Regex> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end(), RegexLess{});
    elems_.erase(std::unique(elems_.begin(), elems_.end(),
                             [](const Regex& a, const Regex& b) { return equal(a, b); }),
                 elems_.end());
}

void RegexSet::insert(const Regex& r) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), r, RegexLess{});
    if (it != elems_.end() && equal(*it, r)) return;
    elems_.insert(it, r);
}

void RegexSet::merge(const RegexSet& other) {
    for (const Regex& r : other.elems_) insert(r);
}

bool RegexSet::contains(const Regex& r) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), r, RegexLess{});
    return it != elems_.end() && equal(*it, r);
}

bool RegexSet::operator==(const RegexSet& other) const {
    if (elems_.size() != other.elems_.size()) return false;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (!equal(elems_[i], other.elems_[i])) return false;
    }
    return true;
}

std::string render(const RegexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += render(s.elems()[i]);
    }
    out += "}";
    return out;
}

RegexSet set_concat_right(const RegexSet& s, const Regex& r) {
    std::vector<Regex> out;
    out.reserve(s.size());
    for (const Regex& e : s.elems()) out.push_back(cat(e, r));
    return RegexSet(std::move(out));
}

RegexSet readback(const Item& e) {
    switch (e->op) {
        case ItemOp::Empty:
        case ItemOp::Epsilon:
        case ItemOp::Sym:
            return {};
        case ItemOp::PSym:
            return RegexSet({sym(e->sym)});
        case ItemOp::Sum: {
            RegexSet s = readback(e->left);
            s.merge(readback(e->right));
            return s;
        }
        case ItemOp::Cat: {
            RegexSet s = set_concat_right(readback(e->left), carrier(e->right));
            s.merge(readback(e->right));
            return s;
        }
        case ItemOp::Star:
            return set_concat_right(readback(e->left), star(carrier(e->left)));
    }
    return {};
}

RegexSet readback(const Pre& p) {
    RegexSet s = readback(p.item);
    if (p.fin) s.insert(epsilon());
    return s;
}

RegexSet nf(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
        case RegexOp::Epsilon:
            return {};
        case RegexOp::Sym:
            return RegexSet({r});
        case RegexOp::Sum: {
            RegexSet s = nf(r->left);
            s.merge(nf(r->right));
            return s;
        }
        case RegexOp::Cat: {
            RegexSet s = set_concat_right(nf(r->left), r->right);
            if (nullable(r->left)) s.merge(nf(r->right));
            return s;
        }
        case RegexOp::Star:
            return set_concat_right(nf(r->left), star(r->left));
    }
    return {};
}

RegexSet nf_eps(const Regex& r) {
    RegexSet s = nf(r);
    if (nullable(r)) s.insert(epsilon());
    return s;
}

RegexSet nf_eps_set(const RegexSet& s) {
    RegexSet out;
    for (const Regex& r : s.elems()) out.merge(nf_eps(r));
    return out;
}

namespace {

void flatten_sum(const Regex& r, std::vector<Regex>& out) {
    if (r->op == RegexOp::Sum) {
        flatten_sum(r->left, out);
        flatten_sum(r->right, out);
    } else {
        out.push_back(canon(r));
    }
}

void flatten_cat_canonical(const Regex& r, std::vector<Regex>& out) {
    if (r->op == RegexOp::Cat) {
        flatten_cat_canonical(r->left, out);
        flatten_cat_canonical(r->right, out);
    } else {
        out.push_back(r);
    }
}

void flatten_cat(const Regex& r, std::vector<Regex>& out) {
    if (r->op == RegexOp::Cat) {
        flatten_cat(r->left, out);
        flatten_cat(r->right, out);
    } else {
        // a collapsed singleton sum may expose further concat structure
        flatten_cat_canonical(canon(r), out);
    }
}

}  // namespace

Regex canon(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
        case RegexOp::Epsilon:
        case RegexOp::Sym:
            return r;
        case RegexOp::Sum: {
            std::vector<Regex> parts;
            flatten_sum(r, parts);
            RegexSet dedup = RegexSet(std::move(parts));
            const auto& elems = dedup.elems();
            Regex acc = elems.back();
            for (auto it = elems.rbegin() + 1; it != elems.rend(); ++it) acc = sum(*it, acc);
            return acc;
        }
        case RegexOp::Cat: {
            std::vector<Regex> parts;
            flatten_cat(r, parts);
            Regex acc = parts.back();
            for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) acc = cat(*it, acc);
            return acc;
        }
        case RegexOp::Star:
            return star(canon(r->left));
    }
    return r;
}

RegexSet canon_set(const RegexSet& s) {
    std::vector<Regex> out;
    out.reserve(s.size());
    for (const Regex& r : s.elems()) out.push_back(canon(r));
    return RegexSet(std::move(out));
}

bool lp_member(const Pre& p, std::string_view w) {
    if (w.size() > static_cast<std::size_t>(kMaxEnumerationLength))
        throw std::invalid_argument("word exceeds length limit");
    const RegexSet rb = readback(p);
    for (const Regex& r : rb.elems()) {
        if (member_oracle(r, w)) return true;
    }
    return false;
}

}  // namespace aupoint
