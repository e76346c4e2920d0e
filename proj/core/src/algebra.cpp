#include "diagcell/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace diagcell {

std::string family_name(Family f) {
    switch (f) {
        case Family::brauer: return "brauer";
        case Family::tl: return "tl";
        case Family::jones: return "jones";
        case Family::group_cyclic: return "group_cyclic";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "brauer" || name == "br") return Family::brauer;
    if (name == "tl" || name == "temperley-lieb") return Family::tl;
    if (name == "jones" || name == "j") return Family::jones;
    if (name == "group_cyclic" || name == "cyclic") return Family::group_cyclic;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

StateFamily state_family(Family f) {
    switch (f) {
        case Family::brauer: return StateFamily::brauer;
        case Family::tl: return StateFamily::planar;
        case Family::jones: return StateFamily::annular;
        case Family::group_cyclic: break;
    }
    throw std::invalid_argument("family has no link states");
}

std::vector<Permutation> level_group(Family f, std::size_t t) {
    switch (f) {
        case Family::brauer: return Permutation::all(t);
        case Family::jones: return Permutation::cyclic_group(t);
        case Family::tl: return {Permutation::identity(t)};
        case Family::group_cyclic: break;
    }
    throw std::invalid_argument("family has no cell groups");
}

StructureAlgebra::StructureAlgebra(Family family, std::size_t n, Ring ring, Scalar delta)
    : family_(family), n_(n), ring_(ring), delta_(std::move(delta)) {
    if (!(delta_.ring() == ring_)) throw std::invalid_argument("delta is not an element of the ground ring");
}

std::optional<std::uint32_t> StructureAlgebra::index_of(const BrauerDiagram& d) const {
    auto it = diagram_index_.find(d.partners());
    if (it == diagram_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> StructureAlgebra::levels() const {
    std::set<int> s(level_.begin(), level_.end());
    return {s.begin(), s.end()};
}

std::span<const Term> StructureAlgebra::product(std::size_t i, std::size_t j) const {
    std::size_t k = i * dim() + j;
    return {terms_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
}

void StructureAlgebra::add_basis(std::string label, int level, std::optional<BrauerDiagram> diagram, Scalar aug) {
    if (diagram) {
        if (diagrams_.size() != labels_.size()) throw std::logic_error("mixed diagram and abstract basis");
        diagram_index_.emplace(diagram->partners(), static_cast<std::uint32_t>(labels_.size()));
        diagrams_.push_back(std::move(*diagram));
    }
    labels_.push_back(std::move(label));
    level_.push_back(level);
    aug_.push_back(std::move(aug));
    parent_index_.push_back(static_cast<std::uint32_t>(parent_index_.size()));
}

void StructureAlgebra::set_table(std::vector<std::size_t> offsets, std::vector<Term> terms) {
    if (offsets.size() != dim() * dim() + 1 || offsets.back() != terms.size())
        throw std::invalid_argument("product table has the wrong shape");
    offsets_ = std::move(offsets);
    terms_ = std::move(terms);
}

StructureAlgebra StructureAlgebra::with_product(std::size_t i, std::size_t j, std::vector<Term> terms) const {
    StructureAlgebra b = *this;
    std::vector<std::size_t> off;
    std::vector<Term> tt;
    off.reserve(offsets_.size());
    off.push_back(0);
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t c = 0; c < dim(); ++c) {
            if (a == i && c == j) tt.insert(tt.end(), terms.begin(), terms.end());
            else {
                auto pr = product(a, c);
                tt.insert(tt.end(), pr.begin(), pr.end());
            }
            off.push_back(tt.size());
        }
    b.set_table(std::move(off), std::move(tt));
    return b;
}

AlgebraElement AlgebraElement::basis(const StructureAlgebra& owner, std::size_t i) {
    AlgebraElement e(owner);
    e.add(static_cast<std::uint32_t>(i), owner.ring().one());
    return e;
}

AlgebraElement AlgebraElement::unit(const StructureAlgebra& owner) {
    AlgebraElement e(owner);
    for (const auto& t : owner.unit()) e.add(t.index, t.coeff);
    return e;
}

Scalar AlgebraElement::coeff(std::uint32_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? owner_->ring().zero() : it->second;
}

void AlgebraElement::add(std::uint32_t i, const Scalar& c) {
    if (i >= owner_->dim()) throw std::out_of_range("basis index out of range");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check_owner(const AlgebraElement& o) const {
    if (owner_ != o.owner_) throw std::invalid_argument("algebra elements have different owners");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_owner(o);
    AlgebraElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add(i, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_owner(o);
    AlgebraElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add(i, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(*owner_);
    for (const auto& [i, x] : terms_) r.add(i, x * c);
    return r;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [i, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_plain_string() + ")*[" + owner_->label(i) + "]";
    }
    return s;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.owner_ == b.owner_ && a.terms_ == b.terms_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.owner() != &b.owner()) throw std::invalid_argument("multiply: different owners");
    const auto& alg = a.owner();
    AlgebraElement r(alg);
    for (const auto& [i, x] : a.terms())
        for (const auto& [j, y] : b.terms()) {
            Scalar xy = x * y;
            for (const auto& t : alg.product(i, j)) r.add(t.index, xy * t.coeff);
        }
    return r;
}

Scalar apply_aug(const AlgebraElement& a) {
    Scalar s = a.owner().ring().zero();
    for (const auto& [i, x] : a.terms()) s += x * a.owner().aug(i);
    return s;
}

AlgebraElement star_elem(const AlgebraElement& a) {
    AlgebraElement r(a.owner());
    for (const auto& [i, x] : a.terms()) r.add(a.owner().star(i), x);
    return r;
}

namespace {

StructureAlgebra build_cyclic(std::size_t n, const Scalar& delta, const Ring& ring) {
    if (n == 0) throw std::invalid_argument("cyclic group algebra needs n >= 1");
    StructureAlgebra a(Family::group_cyclic, n, ring, delta);
    for (std::size_t k = 0; k < n; ++k) a.add_basis("g^" + std::to_string(k), static_cast<int>(n), std::nullopt, ring.one());
    std::vector<std::size_t> off{0};
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            terms.push_back({static_cast<std::uint32_t>((i + j) % n), ring.one()});
            off.push_back(terms.size());
        }
    a.set_table(std::move(off), std::move(terms));
    a.set_unit({{0, ring.one()}});
    std::vector<std::uint32_t> st(n);
    for (std::size_t k = 0; k < n; ++k) st[k] = static_cast<std::uint32_t>((n - k) % n);
    a.set_star(std::move(st));
    return a;
}

}  // namespace

StructureAlgebra build_algebra(Family family, std::size_t n, const Scalar& delta, const Ring& ring,
                               const BuildOptions& opts) {
    if (family == Family::group_cyclic) return build_cyclic(n, delta, ring);
    StructureAlgebra a(family, n, ring, delta);
    const StateFamily sf = state_family(family);

    std::vector<BrauerDiagram> basis;
    for (int t = static_cast<int>(n); t >= 0; t -= 2) {
        auto states = enumerate_link_states(n, static_cast<std::size_t>(t), sf);
        auto group = level_group(family, static_cast<std::size_t>(t));
        std::size_t cell = states.size() * states.size() * group.size();
        if (basis.size() + cell > opts.max_dim)
            throw std::length_error("algebra dimension exceeds the configured cap of " + std::to_string(opts.max_dim));
        for (const auto& p : states)
            for (const auto& g : group)
                for (const auto& q : states) basis.push_back(assemble(p, g, q));
    }
    for (auto& d : basis) {
        int t = static_cast<int>(d.through_count());
        Scalar aug = t == static_cast<int>(n) ? ring.one() : ring.zero();
        std::string lbl = d.to_string();
        a.add_basis(std::move(lbl), t, d, aug);
    }

    const std::size_t dim = a.dim();
    std::vector<Scalar> delta_pow{ring.one()};
    for (std::size_t k = 1; k <= n; ++k) delta_pow.push_back(delta_pow.back() * delta);

    std::vector<std::size_t> off;
    off.reserve(dim * dim + 1);
    off.push_back(0);
    std::vector<Term> terms;
    terms.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto c = concat_product(a.diagram(i), a.diagram(j));
            const Scalar& k = delta_pow[c.loops];
            if (!k.is_zero()) {
                auto idx = a.index_of(c.diagram);
                if (!idx) throw std::logic_error("product left the diagram subalgebra");
                terms.push_back({*idx, k});
            }
            off.push_back(terms.size());
        }
    a.set_table(std::move(off), std::move(terms));
    a.set_unit({{*a.index_of(BrauerDiagram::identity(n)), ring.one()}});

    std::vector<std::uint32_t> st(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto idx = a.index_of(star(a.diagram(i)));
        if (!idx) throw std::logic_error("star left the diagram subalgebra");
        st[i] = *idx;
    }
    a.set_star(std::move(st));
    return a;
}

StructureAlgebra quotient(const StructureAlgebra& a, const std::vector<int>& x) {
    std::set<int> xs(x.begin(), x.end());
    auto lv = a.levels();
    for (int l : xs)
        for (int m : lv)
            if (m < l && !xs.count(m)) throw std::invalid_argument("quotient: level set is not downward closed");

    StructureAlgebra q(a.family(), a.n(), a.ring(), a.delta());
    std::vector<std::int64_t> new_index(a.dim(), -1);
    std::vector<std::uint32_t> parent;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (xs.count(a.level(i))) continue;
        new_index[i] = static_cast<std::int64_t>(q.dim());
        parent.push_back(static_cast<std::uint32_t>(i));
        std::optional<BrauerDiagram> d;
        if (a.has_diagrams()) d = a.diagram(i);
        q.add_basis(a.label(i), a.level(i), std::move(d), a.aug(i));
    }
    std::vector<std::size_t> off{0};
    std::vector<Term> terms;
    for (auto i : parent)
        for (auto j : parent) {
            for (const auto& t : a.product(i, j))
                if (new_index[t.index] >= 0) terms.push_back({static_cast<std::uint32_t>(new_index[t.index]), t.coeff});
            off.push_back(terms.size());
        }
    q.set_table(std::move(off), std::move(terms));
    std::vector<Term> u;
    for (const auto& t : a.unit())
        if (new_index[t.index] >= 0) u.push_back({static_cast<std::uint32_t>(new_index[t.index]), t.coeff});
    q.set_unit(std::move(u));
    std::vector<std::uint32_t> st;
    for (auto i : parent) {
        auto s = new_index[a.star(i)];
        if (s < 0) throw std::logic_error("star does not preserve the ideal");
        st.push_back(static_cast<std::uint32_t>(s));
    }
    q.set_star(std::move(st));
    q.set_parent_index(std::move(parent));
    return q;
}

StructureAlgebra quotient_below(const StructureAlgebra& a, int threshold) {
    std::vector<int> x;
    for (int l : a.levels())
        if (l < threshold) x.push_back(l);
    return quotient(a, x);
}

bool check_unit(const StructureAlgebra& a, std::string* witness) {
    auto u = AlgebraElement::unit(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto b = AlgebraElement::basis(a, i);
        if (!(multiply(u, b) == b) || !(multiply(b, u) == b)) {
            if (witness) *witness = "unit fails on basis " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool check_associative(const StructureAlgebra& a, std::string* witness) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto ij = multiply(AlgebraElement::basis(a, i), AlgebraElement::basis(a, j));
            for (std::size_t k = 0; k < a.dim(); ++k) {
                auto kk = AlgebraElement::basis(a, k);
                auto jk = multiply(AlgebraElement::basis(a, j), kk);
                if (!(multiply(ij, kk) == multiply(AlgebraElement::basis(a, i), jk))) {
                    if (witness) *witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
    return true;
}

bool check_aug_multiplicative(const StructureAlgebra& a, std::string* witness) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto ij = multiply(AlgebraElement::basis(a, i), AlgebraElement::basis(a, j));
            if (apply_aug(ij) != a.aug(i) * a.aug(j)) {
                if (witness) *witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
        }
    return true;
}

bool check_star_antiautomorphism(const StructureAlgebra& a, std::string* witness) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.star(a.star(i)) != i) {
            if (witness) *witness = "star is not an involution at " + std::to_string(i);
            return false;
        }
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto lhs = star_elem(multiply(AlgebraElement::basis(a, i), AlgebraElement::basis(a, j)));
            auto rhs = multiply(AlgebraElement::basis(a, a.star(j)), AlgebraElement::basis(a, a.star(i)));
            if (!(lhs == rhs)) {
                if (witness) *witness = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
        }
    }
    return true;
}

}  // namespace diagcell
