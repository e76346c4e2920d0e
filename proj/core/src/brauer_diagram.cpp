#include "diagcell/brauer_diagram.hpp"

#include <stdexcept>

namespace diagcell {

BrauerDiagram::BrauerDiagram(std::vector<int> partner) : partner_(std::move(partner)) {
    const int m = static_cast<int>(partner_.size());
    if (m % 2 != 0) throw std::invalid_argument("diagram needs an even point count");
    for (int v = 0; v < m; ++v) {
        int w = partner_[v];
        if (w < 0 || w >= m || w == v || partner_[w] != v)
            throw std::invalid_argument("diagram partner map is not a fixed-point-free involution");
    }
}

BrauerDiagram BrauerDiagram::identity(std::size_t n) {
    std::vector<int> p(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<int>(n + i);
        p[n + i] = static_cast<int>(i);
    }
    return BrauerDiagram(std::move(p));
}

std::size_t BrauerDiagram::through_count() const {
    std::size_t t = 0;
    for (std::size_t i = 0; i < n(); ++i) t += partner_[i] >= static_cast<int>(n());
    return t;
}

BrauerDiagram assemble(const LinkState& p, const Permutation& sigma, const LinkState& q) {
    const std::size_t n = p.n();
    if (q.n() != n) throw std::invalid_argument("assemble: point counts differ");
    auto pd = p.defects();
    auto qd = q.defects();
    if (pd.size() != qd.size() || sigma.degree() != pd.size())
        throw std::invalid_argument("assemble: defect counts and permutation degree must agree");
    std::vector<int> d(2 * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.is_defect(i)) d[i] = p.partner(i);
        if (!q.is_defect(i)) d[n + i] = static_cast<int>(n) + q.partner(i);
    }
    for (std::size_t i = 0; i < qd.size(); ++i) {
        int a = static_cast<int>(n) + qd[i];
        int b = pd[sigma(i)];
        d[a] = b;
        d[b] = a;
    }
    return BrauerDiagram(std::move(d));
}

Decomposition decompose(const BrauerDiagram& d) {
    const int n = static_cast<int>(d.n());
    std::vector<int> p(n), q(n);
    for (int i = 0; i < n; ++i) {
        int a = d.partner(i);
        p[i] = a < n ? a : i;
        int b = d.partner(n + i);
        q[i] = b >= n ? b - n : i;
    }
    LinkState ps(std::move(p)), qs(std::move(q));
    auto pd = ps.defects();
    auto qd = qs.defects();
    std::vector<int> p_index(n, -1);
    for (std::size_t k = 0; k < pd.size(); ++k) p_index[pd[k]] = static_cast<int>(k);
    std::vector<int> sigma(qd.size());
    for (std::size_t k = 0; k < qd.size(); ++k) sigma[k] = p_index[d.partner(n + qd[k])];
    return {std::move(ps), Permutation(std::move(sigma)), std::move(qs)};
}

Concatenation concat_product(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    const int n = static_cast<int>(d1.n());
    if (static_cast<int>(d2.n()) != n) throw std::invalid_argument("concat_product: point counts differ");
    std::vector<char> middle_seen(n, 0);
    std::vector<int> out(2 * n, -1);

    // Walk from outer point v (on d1's left if v < n, else d2's right) to the
    // outer point where the strand ends.
    auto walk = [&](int v) {
        bool in_d1 = v < n;
        int cur = in_d1 ? d1.partner(v) : d2.partner(v);
        while (true) {
            if (in_d1) {
                if (cur < n) return cur;
                int m = cur - n;
                middle_seen[m] = 1;
                cur = d2.partner(m);
                in_d1 = false;
            } else {
                if (cur >= n) return cur;
                int m = cur;
                middle_seen[m] = 1;
                cur = d1.partner(n + m);
                in_d1 = true;
            }
        }
    };
    for (int v = 0; v < 2 * n; ++v) {
        if (out[v] != -1) continue;
        int w = walk(v);
        out[v] = w;
        out[w] = v;
    }
    std::size_t loops = 0;
    for (int m = 0; m < n; ++m) {
        if (middle_seen[m]) continue;
        ++loops;
        int cur = m;
        do {
            middle_seen[cur] = 1;
            int r = d2.partner(cur);            // stays in the middle
            middle_seen[r] = 1;
            cur = d1.partner(n + r) - n;
        } while (!middle_seen[cur]);
    }
    return {loops, BrauerDiagram(std::move(out))};
}

BrauerDiagram star(const BrauerDiagram& d) {
    const int n = static_cast<int>(d.n());
    std::vector<int> p(2 * n);
    auto flip = [n](int v) { return v < n ? v + n : v - n; };
    for (int v = 0; v < 2 * n; ++v) p[flip(v)] = flip(d.partner(v));
    return BrauerDiagram(std::move(p));
}

std::vector<BrauerDiagram> enumerate_brauer_diagrams(std::size_t n) {
    std::vector<BrauerDiagram> out;
    std::vector<int> p(2 * n, -1);
    auto rec = [&](auto&& self) -> void {
        std::size_t i = 0;
        while (i < p.size() && p[i] != -1) ++i;
        if (i == p.size()) {
            out.emplace_back(p);
            return;
        }
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[j] != -1) continue;
            p[i] = static_cast<int>(j);
            p[j] = static_cast<int>(i);
            self(self);
            p[i] = p[j] = -1;
        }
    };
    rec(rec);
    return out;
}

}  // namespace diagcell
