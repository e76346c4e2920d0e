#include "diagcell/link_state.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace diagcell {

LinkState::LinkState(std::vector<int> partner) : partner_(std::move(partner)) {
    const int n = static_cast<int>(partner_.size());
    for (int i = 0; i < n; ++i) {
        int j = partner_[i];
        if (j < 0 || j >= n || partner_[j] != i) throw std::invalid_argument("link state partner map is not an involution");
    }
}

LinkState LinkState::all_defects(std::size_t n) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    return LinkState(std::move(p));
}

LinkState LinkState::from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_pairs(n, std::vector<std::pair<int, int>>(pairs));
}

LinkState LinkState::from_pairs(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    for (auto [a, b] : pairs) {
        int i = a - 1, j = b - 1;
        if (i < 0 || j < 0 || i >= static_cast<int>(n) || j >= static_cast<int>(n) || i == j || p[i] != i || p[j] != j)
            throw std::invalid_argument("bad connection list");
        p[i] = j;
        p[j] = i;
    }
    return LinkState(std::move(p));
}

std::size_t LinkState::defect_count() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n(); ++i) t += is_defect(i);
    return t;
}

std::vector<int> LinkState::defects() const {
    std::vector<int> d;
    for (std::size_t i = 0; i < n(); ++i)
        if (is_defect(i)) d.push_back(static_cast<int>(i));
    return d;
}

std::vector<std::pair<int, int>> LinkState::connections() const {
    std::vector<std::pair<int, int>> c;
    for (std::size_t i = 0; i < n(); ++i)
        if (partner_[i] > static_cast<int>(i)) c.emplace_back(static_cast<int>(i), partner_[i]);
    return c;
}

bool LinkState::is_planar() const {
    for (auto [i, j] : connections())
        for (int k = i; k <= j; ++k) {
            if (is_defect(k)) return false;
            if (partner_[k] < i || partner_[k] > j) return false;
        }
    return true;
}

bool LinkState::is_annular() const {
    const int m = static_cast<int>(n());
    // membership in the open cyclic interval (a, b)
    auto inside = [m](int a, int b, int k) {
        int span = ((b - a) % m + m) % m;
        int off = ((k - a) % m + m) % m;
        return off > 0 && off < span;
    };
    for (auto [i, j] : connections()) {
        bool defects_in_ij = false, defects_in_ji = false;
        for (int k = 0; k < m; ++k) {
            if (k == i || k == j) continue;
            bool in_ij = inside(i, j, k);
            if (in_ij != inside(i, j, partner_[k])) return false;
            if (is_defect(k)) (in_ij ? defects_in_ij : defects_in_ji) = true;
        }
        if (defects_in_ij && defects_in_ji) return false;
    }
    return true;
}

bool LinkState::in_family(StateFamily f) const {
    switch (f) {
        case StateFamily::brauer: return true;
        case StateFamily::planar: return is_planar();
        case StateFamily::annular: return is_annular();
    }
    return false;
}

std::string LinkState::to_string() const {
    std::string s;
    for (auto [i, j] : connections()) s += "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
    s += " |";
    for (int d : defects()) s += " " + std::to_string(d + 1);
    return s;
}

namespace {

void enumerate_rec(std::vector<int>& p, std::size_t defects_left, std::vector<LinkState>& out, StateFamily f) {
    const int n = static_cast<int>(p.size());
    int i = 0;
    while (i < n && p[i] != -1) ++i;
    if (i == n) {
        if (defects_left == 0) {
            LinkState s(p);
            if (s.in_family(f)) out.push_back(std::move(s));
        }
        return;
    }
    if (defects_left > 0) {
        p[i] = i;
        enumerate_rec(p, defects_left - 1, out, f);
        p[i] = -1;
    }
    for (int j = i + 1; j < n; ++j) {
        if (p[j] != -1) continue;
        p[i] = j;
        p[j] = i;
        enumerate_rec(p, defects_left, out, f);
        p[i] = p[j] = -1;
    }
}

}  // namespace

std::vector<LinkState> enumerate_link_states(std::size_t n, std::size_t t, StateFamily family) {
    std::vector<LinkState> out;
    if (t > n || (n - t) % 2 != 0) return out;
    std::vector<int> p(n, -1);
    enumerate_rec(p, t, out, family);
    return out;
}

LinkState rotate(const LinkState& q) {
    if (!q.is_annular()) throw std::invalid_argument("rotate: link state is not annular");
    const std::size_t n = q.n();
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[(i + 1) % n] = static_cast<int>((q.partner(i) + 1) % n);
    return LinkState(std::move(p));
}

LinkState greedy_partner(const LinkState& q) {
    const int n = static_cast<int>(q.n());
    if (q.defect_count() == 0) throw std::invalid_argument("greedy_partner: needs at least one defect");
    if (!q.is_planar()) throw std::invalid_argument("greedy_partner: link state is not planar");

    std::set<int> live;
    for (int d : q.defects()) live.insert(d);
    std::vector<char> available(n, 0);  // indexed by endpoint
    for (int i = 0; i < n; ++i) available[i] = !q.is_defect(i);
    std::vector<int> p(n, -1);

    while (!live.empty()) {
        int i = *live.begin();
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (!available[j] || j == i) continue;
            int lo = std::min(i, j), hi = std::max(i, j);
            auto it = live.upper_bound(lo);
            if (it != live.end() && *it < hi) continue;
            if (best < 0 || std::abs(j - i) < std::abs(best - i)) best = j;
        }
        live.erase(i);
        if (best < 0) {
            p[i] = i;
            continue;
        }
        int k = q.partner(best);
        p[i] = best;
        p[best] = i;
        available[best] = available[k] = 0;
        live.insert(k);
    }
    return LinkState(std::move(p));
}

}  // namespace diagcell
