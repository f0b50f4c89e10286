#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aupoint {

/// Plain regular expressions, shared immutable trees.
enum class RegexOp { Empty, Epsilon, Sym, Sum, Cat, Star };

struct RegexNode;
using Regex = std::shared_ptr<const RegexNode>;

struct RegexNode {
    RegexOp op;
    char sym = 0;
    Regex left;
    Regex right;
};

Regex empty_set();
Regex epsilon();
Regex sym(char c);
Regex sum(Regex left, Regex right);
Regex cat(Regex left, Regex right);
Regex star(Regex inner);

/// Pointed items: same shape as Regex plus pointed symbols (PSym(c) is "•c").
enum class ItemOp { Empty, Epsilon, Sym, PSym, Sum, Cat, Star };

struct ItemNode;
using Item = std::shared_ptr<const ItemNode>;

struct ItemNode {
    ItemOp op;
    char sym = 0;
    Item left;
    Item right;
};

Item item_empty_set();
Item item_epsilon();
Item item_sym(char c);
Item item_psym(char c);
Item item_sum(Item left, Item right);
Item item_cat(Item left, Item right);
Item item_star(Item inner);

/// Pointed regular expression: an item plus the trailing-point flag.
/// The flag alone decides acceptance.
struct Pre {
    Item item;
    bool fin = false;
};

// Total structural order: constructor tag, then symbol, then children.
int compare(const Regex& a, const Regex& b);
int compare(const Item& a, const Item& b);
int compare(const Pre& a, const Pre& b);

bool equal(const Regex& a, const Regex& b);
bool equal(const Item& a, const Item& b);
bool equal(const Pre& a, const Pre& b);

struct RegexLess {
    bool operator()(const Regex& a, const Regex& b) const { return compare(a, b) < 0; }
};

bool nullable(const Regex& r);

/// Point erasure.
Regex carrier(const Item& e);
Regex carrier(const Pre& p);

bool has_point(const Item& e);

/// Distinct symbols occurring in r, sorted.
std::string symbols_of(const Regex& r);

std::string render(const Regex& r);
std::string render(const Item& e);
std::string render(const Pre& p);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

// Concrete grammar:
//   expr   := term ('+' term)*
//   term   := factor+
//   factor := atom '*'*
//   atom   := literal | '\0' | '\e' | '\' reserved | '^' literal | '(' expr ')'
// literal is an ASCII alphanumeric; reserved characters are ( ) + * \ ^ |
// and may appear as symbols only when escaped.
Regex parse(std::string_view text);
Item parse_item(std::string_view text);

bool is_reserved_char(char c);

}  // namespace aupoint
