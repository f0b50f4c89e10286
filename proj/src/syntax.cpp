#include "aupoint/syntax.hpp"

#include <cctype>
#include <cstring>
#include <set>

namespace aupoint {

namespace {

Regex make_regex(RegexOp op, char sym, Regex l, Regex r) {
    auto n = std::make_shared<RegexNode>();
    n->op = op;
    n->sym = sym;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

Item make_item(ItemOp op, char sym, Item l, Item r) {
    auto n = std::make_shared<ItemNode>();
    n->op = op;
    n->sym = sym;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

}  // namespace

Regex empty_set() {
    static const Regex r = make_regex(RegexOp::Empty, 0, nullptr, nullptr);
    return r;
}

Regex epsilon() {
    static const Regex r = make_regex(RegexOp::Epsilon, 0, nullptr, nullptr);
    return r;
}

Regex sym(char c) { return make_regex(RegexOp::Sym, c, nullptr, nullptr); }

Regex sum(Regex left, Regex right) {
    return make_regex(RegexOp::Sum, 0, std::move(left), std::move(right));
}

Regex cat(Regex left, Regex right) {
    return make_regex(RegexOp::Cat, 0, std::move(left), std::move(right));
}

Regex star(Regex inner) { return make_regex(RegexOp::Star, 0, std::move(inner), nullptr); }

Item item_empty_set() {
    static const Item e = make_item(ItemOp::Empty, 0, nullptr, nullptr);
    return e;
}

Item item_epsilon() {
    static const Item e = make_item(ItemOp::Epsilon, 0, nullptr, nullptr);
    return e;
}

Item item_sym(char c) { return make_item(ItemOp::Sym, c, nullptr, nullptr); }

Item item_psym(char c) { return make_item(ItemOp::PSym, c, nullptr, nullptr); }

Item item_sum(Item left, Item right) {
    return make_item(ItemOp::Sum, 0, std::move(left), std::move(right));
}

Item item_cat(Item left, Item right) {
    return make_item(ItemOp::Cat, 0, std::move(left), std::move(right));
}

Item item_star(Item inner) { return make_item(ItemOp::Star, 0, std::move(inner), nullptr); }

int compare(const Regex& a, const Regex& b) {
    if (a.get() == b.get()) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
        case RegexOp::Empty:
        case RegexOp::Epsilon:
            return 0;
        case RegexOp::Sym:
            return (a->sym > b->sym) - (a->sym < b->sym);
        case RegexOp::Star:
            return compare(a->left, b->left);
        case RegexOp::Sum:
        case RegexOp::Cat:
            if (int c = compare(a->left, b->left)) return c;
            return compare(a->right, b->right);
    }
    return 0;
}

int compare(const Item& a, const Item& b) {
    if (a.get() == b.get()) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
        case ItemOp::Empty:
        case ItemOp::Epsilon:
            return 0;
        case ItemOp::Sym:
        case ItemOp::PSym:
            return (a->sym > b->sym) - (a->sym < b->sym);
        case ItemOp::Star:
            return compare(a->left, b->left);
        case ItemOp::Sum:
        case ItemOp::Cat:
            if (int c = compare(a->left, b->left)) return c;
            return compare(a->right, b->right);
    }
    return 0;
}

int compare(const Pre& a, const Pre& b) {
    if (int c = compare(a.item, b.item)) return c;
    return static_cast<int>(a.fin) - static_cast<int>(b.fin);
}

bool equal(const Regex& a, const Regex& b) { return compare(a, b) == 0; }
bool equal(const Item& a, const Item& b) { return compare(a, b) == 0; }
bool equal(const Pre& a, const Pre& b) { return compare(a, b) == 0; }

bool nullable(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
            return false;
        case RegexOp::Epsilon:
            return true;
        case RegexOp::Sym:
            return false;
        case RegexOp::Sum:
            return nullable(r->left) || nullable(r->right);
        case RegexOp::Cat:
            return nullable(r->left) && nullable(r->right);
        case RegexOp::Star:
            return true;
    }
    return false;
}

Regex carrier(const Item& e) {
    switch (e->op) {
        case ItemOp::Empty:
            return empty_set();
        case ItemOp::Epsilon:
            return epsilon();
        case ItemOp::Sym:
        case ItemOp::PSym:
            return sym(e->sym);
        case ItemOp::Sum:
            return sum(carrier(e->left), carrier(e->right));
        case ItemOp::Cat:
            return cat(carrier(e->left), carrier(e->right));
        case ItemOp::Star:
            return star(carrier(e->left));
    }
    return empty_set();
}

Regex carrier(const Pre& p) { return carrier(p.item); }

bool has_point(const Item& e) {
    switch (e->op) {
        case ItemOp::Empty:
        case ItemOp::Epsilon:
        case ItemOp::Sym:
            return false;
        case ItemOp::PSym:
            return true;
        case ItemOp::Sum:
        case ItemOp::Cat:
            return has_point(e->left) || has_point(e->right);
        case ItemOp::Star:
            return has_point(e->left);
    }
    return false;
}

std::string symbols_of(const Regex& r) {
    std::set<char> seen;
    auto walk = [&](auto&& self, const Regex& e) -> void {
        switch (e->op) {
            case RegexOp::Sym:
                seen.insert(e->sym);
                break;
            case RegexOp::Sum:
            case RegexOp::Cat:
                self(self, e->left);
                self(self, e->right);
                break;
            case RegexOp::Star:
                self(self, e->left);
                break;
            default:
                break;
        }
    };
    walk(walk, r);
    return std::string(seen.begin(), seen.end());
}

bool is_reserved_char(char c) { return std::strchr("()+*\\^|", c) != nullptr; }

namespace {

// Precedence levels for printing: sum < cat < star < atom.
constexpr int kPrecSum = 0;
constexpr int kPrecCat = 1;
constexpr int kPrecStar = 2;
constexpr int kPrecAtom = 3;

void append_symbol(std::string& out, char c) {
    if (is_reserved_char(c)) out.push_back('\\');
    out.push_back(c);
}

int item_prec(const Item& e) {
    switch (e->op) {
        case ItemOp::Sum:
            return kPrecSum;
        case ItemOp::Cat:
            return kPrecCat;
        case ItemOp::Star:
            return kPrecStar;
        case ItemOp::PSym:
            // "^b*" would re-parse correctly, but points read better kept
            // visually tight, so a pointed symbol under a star is bracketed.
            return kPrecStar;
        default:
            return kPrecAtom;
    }
}

// Printed forms re-parse to the same tree: '+' and juxtaposition are
// left-associative, so right operands one level up need parentheses.
void render_item(std::string& out, const Item& e, int min_prec) {
    const int prec = item_prec(e);
    const bool paren = prec < min_prec;
    if (paren) out.push_back('(');
    switch (e->op) {
        case ItemOp::Empty:
            out += "\\0";
            break;
        case ItemOp::Epsilon:
            out += "\\e";
            break;
        case ItemOp::Sym:
            append_symbol(out, e->sym);
            break;
        case ItemOp::PSym:
            out.push_back('^');
            append_symbol(out, e->sym);
            break;
        case ItemOp::Sum:
            render_item(out, e->left, kPrecSum);
            out.push_back('+');
            render_item(out, e->right, kPrecCat);
            break;
        case ItemOp::Cat:
            render_item(out, e->left, kPrecCat);
            render_item(out, e->right, kPrecStar);
            break;
        case ItemOp::Star:
            render_item(out, e->left, kPrecAtom);
            out.push_back('*');
            break;
    }
    if (paren) out.push_back(')');
}

Item regex_to_item(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
            return item_empty_set();
        case RegexOp::Epsilon:
            return item_epsilon();
        case RegexOp::Sym:
            return item_sym(r->sym);
        case RegexOp::Sum:
            return item_sum(regex_to_item(r->left), regex_to_item(r->right));
        case RegexOp::Cat:
            return item_cat(regex_to_item(r->left), regex_to_item(r->right));
        case RegexOp::Star:
            return item_star(regex_to_item(r->left));
    }
    return item_empty_set();
}

Regex item_to_regex(const Item& e, std::size_t offset) {
    if (has_point(e)) throw ParseError("point marker not allowed in plain regex", offset);
    return carrier(e);
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    static bool is_literal(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

    bool starts_atom() const {
        if (at_end()) return false;
        char c = peek();
        return is_literal(c) || c == '\\' || c == '^' || c == '(';
    }

    char symbol_char() {
        if (at_end()) fail("expected symbol");
        char c = peek();
        if (is_literal(c)) {
            ++pos;
            return c;
        }
        if (c == '\\') {
            ++pos;
            if (at_end()) fail("dangling escape");
            char d = peek();
            if (!is_reserved_char(d)) fail("unknown escape");
            ++pos;
            return d;
        }
        fail("expected symbol");
    }

    Item atom() {
        char c = peek();
        if (c == '(') {
            std::size_t open = pos;
            ++pos;
            Item e = expr();
            if (at_end() || peek() != ')') {
                pos = open;
                fail("unbalanced parenthesis");
            }
            ++pos;
            return e;
        }
        if (c == '^') {
            ++pos;
            return item_psym(symbol_char());
        }
        if (c == '\\') {
            ++pos;
            if (at_end()) fail("dangling escape");
            char d = peek();
            if (d == '0') {
                ++pos;
                return item_empty_set();
            }
            if (d == 'e') {
                ++pos;
                return item_epsilon();
            }
            if (is_reserved_char(d)) {
                ++pos;
                return item_sym(d);
            }
            fail("unknown escape");
        }
        if (is_literal(c)) {
            ++pos;
            return item_sym(c);
        }
        fail("unexpected character");
    }

    Item factor() {
        Item e = atom();
        while (!at_end() && peek() == '*') {
            ++pos;
            e = item_star(e);
        }
        return e;
    }

    Item term() {
        Item e = factor();
        while (starts_atom()) e = item_cat(e, factor());
        return e;
    }

    Item expr() {
        Item e = term();
        while (!at_end() && peek() == '+') {
            ++pos;
            e = item_sum(e, term());
        }
        return e;
    }
};

Item parse_top(std::string_view text) {
    Parser p{text};
    if (p.at_end()) p.fail("empty input");
    Item e = p.expr();
    if (!p.at_end()) {
        if (p.peek() == ')') p.fail("unbalanced parenthesis");
        p.fail("unexpected trailing input");
    }
    return e;
}

}  // namespace

std::string render(const Regex& r) { return render(regex_to_item(r)); }

std::string render(const Item& e) {
    std::string out;
    render_item(out, e, kPrecSum);
    return out;
}

std::string render(const Pre& p) {
    std::string out = render(p.item);
    if (p.fin) out += "|•";
    return out;
}

Regex parse(std::string_view text) { return item_to_regex(parse_top(text), 0); }

Item parse_item(std::string_view text) { return parse_top(text); }

}  // namespace aupoint
