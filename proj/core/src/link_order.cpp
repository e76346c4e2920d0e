#include "diagcell/link_order.hpp"

#include <stdexcept>
#include <vector>

namespace diagcell {

bool tl_leq(const LinkState& p, const LinkState& q) {
    if (p.n() != q.n()) throw std::invalid_argument("link states of different sizes");
    for (std::size_t i = 0; i < q.n(); ++i)
        if (!q.is_defect(i) && p.partner(i) != q.partner(i)) return false;
    return true;
}

Order tl_compare(const LinkState& a, const LinkState& b) {
    if (a == b) return Order::eq;
    if (tl_leq(a, b)) return Order::lt;
    if (tl_leq(b, a)) return Order::gt;
    return Order::incomparable;
}

std::optional<LinkState> tl_meet(const LinkState& a, const LinkState& b) {
    if (a.n() != b.n()) throw std::invalid_argument("link states of different sizes");
    std::vector<int> partner(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        const int pa = a.partner(i), pb = b.partner(i);
        const int self = static_cast<int>(i);
        if (pa != self && pb != self && pa != pb) return std::nullopt;
        partner[i] = pa != self ? pa : pb;
    }
    // i may be a defect of a and joined in b to a point that a joins elsewhere.
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[partner[i]] != static_cast<int>(i)) return std::nullopt;
    LinkState m(std::move(partner));
    if (!m.is_planar()) return std::nullopt;
    return m;
}

}  // namespace diagcell
