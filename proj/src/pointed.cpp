#include "aupoint/pointed.hpp"

namespace aupoint {

Item embed(const Regex& r) {
    switch (r->op) {
        case RegexOp::Empty:
            return item_empty_set();
        case RegexOp::Epsilon:
            return item_epsilon();
        case RegexOp::Sym:
            return item_sym(r->sym);
        case RegexOp::Sum:
            return item_sum(embed(r->left), embed(r->right));
        case RegexOp::Cat:
            return item_cat(embed(r->left), embed(r->right));
        case RegexOp::Star:
            return item_star(embed(r->left));
    }
    return item_empty_set();
}

Pre plus_lift(const Pre& p1, const Pre& p2) {
    return {item_sum(p1.item, p2.item), p1.fin || p2.fin};
}

Pre cat_lift(const Pre& p1, const Pre& p2) {
    if (!p1.fin) return {item_cat(p1.item, p2.item), p2.fin};
    Pre b = broadcast(p2.item);
    return {item_cat(p1.item, b.item), p2.fin || b.fin};
}

Pre star_lift(const Pre& p) {
    if (!p.fin) return {item_star(p.item), false};
    Pre b = broadcast(p.item);
    return {item_star(b.item), true};
}

Pre broadcast(const Item& e) {
    switch (e->op) {
        case ItemOp::Empty:
            return {e, false};
        case ItemOp::Epsilon:
            return {e, true};
        case ItemOp::Sym:
            return {item_psym(e->sym), false};
        case ItemOp::PSym:
            return {e, false};
        case ItemOp::Sum:
            return plus_lift(broadcast(e->left), broadcast(e->right));
        case ItemOp::Cat:
            return cat_lift(broadcast(e->left), Pre{e->right, false});
        case ItemOp::Star: {
            Pre b = broadcast(e->left);
            return {item_star(b.item), true};
        }
    }
    return {e, false};
}

Pre broadcast(const Pre& p) {
    Pre b = broadcast(p.item);
    return {b.item, p.fin || b.fin};
}

Pre move(const Item& e, char a) {
    switch (e->op) {
        case ItemOp::Empty:
        case ItemOp::Epsilon:
        case ItemOp::Sym:
            return {e, false};
        case ItemOp::PSym:
            return {item_sym(e->sym), e->sym == a};
        case ItemOp::Sum:
            return plus_lift(move(e->left, a), move(e->right, a));
        case ItemOp::Cat:
            return cat_lift(move(e->left, a), move(e->right, a));
        case ItemOp::Star:
            return star_lift(move(e->left, a));
    }
    return {e, false};
}

Pre move(const Pre& p, char a) { return move(p.item, a); }

Pre move_star(Pre p, std::string_view w) {
    for (char a : w) p = move(p, a);
    return p;
}

}  // namespace aupoint
