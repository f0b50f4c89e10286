#include "aupoint/merge.hpp"

namespace aupoint {

namespace {

[[noreturn]] void mismatch() { throw CarrierMismatchError("merge requires equal carriers"); }

bool same_shape(ItemOp a, ItemOp b) {
    auto erase = [](ItemOp op) { return op == ItemOp::PSym ? ItemOp::Sym : op; };
    return erase(a) == erase(b);
}

}  // namespace

Item merge_items(const Item& e1, const Item& e2) {
    if (!same_shape(e1->op, e2->op)) mismatch();
    switch (e1->op) {
        case ItemOp::Empty:
        case ItemOp::Epsilon:
            return e1;
        case ItemOp::Sym:
        case ItemOp::PSym:
            if (e1->sym != e2->sym) mismatch();
            if (e1->op == ItemOp::PSym) return e1;
            return e2;  // pointed iff pointed in either input
        case ItemOp::Sum:
            return item_sum(merge_items(e1->left, e2->left), merge_items(e1->right, e2->right));
        case ItemOp::Cat:
            return item_cat(merge_items(e1->left, e2->left), merge_items(e1->right, e2->right));
        case ItemOp::Star:
            return item_star(merge_items(e1->left, e2->left));
    }
    mismatch();
}

Pre merge_pres(const Pre& p1, const Pre& p2) {
    return {merge_items(p1.item, p2.item), p1.fin || p2.fin};
}

}  // namespace aupoint
