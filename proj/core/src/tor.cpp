#include "diagcell/tor.hpp"

#include "diagcell/detail/field.hpp"
#include "diagcell/detail/sparse_echelon.hpp"
#include "diagcell/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diagcell {

std::string TorReport::to_string() const {
    std::ostringstream os;
    os << "ring " << ring << "\ntor";
    for (auto d : dims) os << " " << d;
    os << "\ngenerators";
    for (auto g : generators) os << " " << g;
    os << "\nkernels";
    for (auto k : kernel_dims) os << " " << k;
    if (partial) os << "\npartial: " << note;
    if (!complex_ok) os << "\ncomplex check FAILED";
    return os.str();
}

bool same_dims(const TorReport& x, const TorReport& y) {
    const std::size_t m = std::min(x.dims.size(), y.dims.size());
    return std::equal(x.dims.begin(), x.dims.begin() + static_cast<std::ptrdiff_t>(m), y.dims.begin());
}

namespace {

template <class F>
class Resolver {
public:
    using V = typename F::value_type;
    using Vec = detail::SparseVec<F>;

    Resolver(const StructureAlgebra& a, const F& f, const TorOptions& o) : a_(a), f_(f), opts_(o), n_(a.dim()) {
        off_.reserve(n_ * n_ + 1);
        off_.push_back(0);
        for (std::size_t b = 0; b < n_; ++b)
            for (std::size_t c = 0; c < n_; ++c) {
                for (const auto& t : a.product(b, c)) terms_.emplace_back(t.index, f.from(t.coeff));
                off_.push_back(terms_.size());
            }
        for (std::size_t b = 0; b < n_; ++b) aug_.push_back(f.from(a.aug(b)));
        cap_ = o.cap ? o.cap : (a.ring().is_rational() ? 100000 : 2000000);
    }

    TorReport run() {
        TorReport r;
        r.ring = a_.ring().name();
        r.qmax = opts_.qmax;
        r.generators.push_back(1);

        std::vector<Vec> kernel = augmentation_kernel();
        r.kernel_dims.push_back(kernel.size());
        std::vector<Vec> prev_gens{Vec{{0u, f_.one()}}};  // F_0 = A generated by 1
        std::size_t completed = 0;  // last stage with a full generating set

        for (std::size_t k = 1; k <= opts_.qmax + 1; ++k) {
            const bool last = k == opts_.qmax + 1;
            const std::size_t width = r.generators.back() * n_;
            std::vector<Vec> gens, rels;
            bool capped = false;
            std::size_t rank = select(kernel, width, !last, gens, rels, capped);
            if (capped) {
                r.partial = true;
                r.note = "generator cap " + std::to_string(cap_) + " reached at stage " + std::to_string(k);
                break;
            }
            if (rank != kernel.size()) throw std::logic_error("resolution stage does not reach the kernel");
            if (opts_.check_complex && !complex_holds(k, gens, prev_gens, k >= 2 ? r.generators[k - 2] * n_ : 0)) r.complex_ok = false;
            r.generators.push_back(gens.size());
            r.t_ranks.push_back(tensor_rank(gens, r.generators[k - 1]));
            if (!last) r.kernel_dims.push_back(rels.size());
            completed = k;
            prev_gens = std::move(gens);
            kernel = std::move(rels);
        }

        // Tor_q = g_q - rank T_q - rank T_{q+1}; needs stage q+1.
        for (std::size_t q = 0; q + 1 <= completed && q <= opts_.qmax; ++q) {
            std::size_t below = q == 0 ? 0 : r.t_ranks[q - 1];
            r.dims.push_back(r.generators[q] - below - r.t_ranks[q]);
        }
        return r;
    }

private:
    std::vector<Vec> augmentation_kernel() const {
        std::size_t b0 = n_;
        for (std::size_t b = 0; b < n_; ++b)
            if (!f_.is_zero(aug_[b])) {
                b0 = b;
                break;
            }
        if (b0 == n_) throw std::invalid_argument("augmentation is zero");
        const V inv0 = f_.inv(aug_[b0]);
        std::vector<Vec> out;
        for (std::size_t b = 0; b < n_; ++b) {
            if (b == b0) continue;
            Vec v;
            const V c = f_.neg(f_.mul(aug_[b], inv0));
            if (f_.is_zero(c)) {
                v.emplace_back(static_cast<std::uint32_t>(b), f_.one());
            } else if (b < b0) {
                v.emplace_back(static_cast<std::uint32_t>(b), f_.one());
                v.emplace_back(static_cast<std::uint32_t>(b0), c);
            } else {
                v.emplace_back(static_cast<std::uint32_t>(b0), c);
                v.emplace_back(static_cast<std::uint32_t>(b), f_.one());
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    // acc += c * (b . v), v in coordinates (generator j, basis element).
    void left_mul(std::size_t b, const V& c, const Vec& v, detail::SparseAccumulator<F>& acc) const {
        for (const auto& [idx, x] : v) {
            const std::size_t j = idx / n_, basis = idx % n_;
            const V cx = f_.mul(c, x);
            const std::size_t at = b * n_ + basis;
            for (std::size_t t = off_[at]; t < off_[at + 1]; ++t)
                acc.add(static_cast<std::uint32_t>(j * n_ + terms_[t].first), f_.mul(cx, terms_[t].second));
        }
    }

    // Inserts the n translates of v as generator number i.
    void add_translates(detail::SparseEchelon<F>& ech, detail::SparseAccumulator<F>& acc, const Vec& v, std::size_t i,
                        bool tags, std::vector<Vec>& rels) const {
        if (tags) ech.grow_tags((i + 1) * n_);
        for (std::size_t b = 0; b < n_; ++b) {
            left_mul(b, f_.one(), v, acc);
            Vec w = acc.take();
            if (tags) {
                Vec rel;
                if (!ech.insert(w, Vec{{static_cast<std::uint32_t>(i * n_ + b), f_.one()}}, &rel)) rels.push_back(std::move(rel));
            } else {
                ech.insert(w);
            }
        }
    }

    std::size_t build(const std::vector<Vec>& gens, std::size_t width, bool tags, std::vector<Vec>& rels) const {
        detail::SparseEchelon<F> ech(f_, width);
        detail::SparseAccumulator<F> acc(f_, width);
        for (std::size_t i = 0; i < gens.size(); ++i) add_translates(ech, acc, gens[i], i, tags, rels);
        return ech.rank();
    }

    std::size_t select(const std::vector<Vec>& kernel, std::size_t width, bool tags, std::vector<Vec>& gens,
                       std::vector<Vec>& rels, bool& capped) const {
        std::vector<std::size_t> order(kernel.size());
        std::iota(order.begin(), order.end(), 0);
        if (opts_.reversed) std::reverse(order.begin(), order.end());
        const bool minimize = opts_.mode != GeneratorMode::all_kernel;
        const bool tag_now = tags && opts_.mode != GeneratorMode::prune;

        detail::SparseEchelon<F> ech(f_, width);
        detail::SparseAccumulator<F> acc(f_, width);
        for (auto k : order) {
            if (minimize && ech.rank() == kernel.size()) break;
            if (minimize && ech.contains(kernel[k])) continue;
            if ((gens.size() + 1) * n_ > cap_) {
                capped = true;
                return ech.rank();
            }
            gens.push_back(kernel[k]);
            add_translates(ech, acc, kernel[k], gens.size() - 1, tag_now, rels);
        }
        if (opts_.mode != GeneratorMode::prune) return ech.rank();

        for (std::size_t i = 0; i < gens.size();) {
            std::vector<Vec> trial;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) trial.push_back(gens[j]);
            std::vector<Vec> unused;
            if (build(trial, width, false, unused) == kernel.size()) gens = std::move(trial);
            else ++i;
        }
        rels.clear();
        return build(gens, width, tags, rels);
    }

    // Rank of d_k after tensoring: row i has entry sum_b v_i[(j, b)] aug(b) in column j.
    std::size_t tensor_rank(const std::vector<Vec>& gens, std::size_t prev_count) const {
        detail::SparseEchelon<F> ech(f_, prev_count);
        detail::SparseAccumulator<F> acc(f_, prev_count);
        for (const auto& v : gens) {
            for (const auto& [idx, x] : v) acc.add(static_cast<std::uint32_t>(idx / n_), f_.mul(x, aug_[idx % n_]));
            ech.insert(acc.take());
        }
        return ech.rank();
    }

    bool complex_holds(std::size_t k, const std::vector<Vec>& gens, const std::vector<Vec>& prev_gens,
                       std::size_t width) const {
        if (k == 1) {
            for (const auto& v : gens) {
                V s = f_.zero();
                for (const auto& [idx, x] : v) s = f_.add(s, f_.mul(x, aug_[idx]));
                if (!f_.is_zero(s)) return false;
            }
            return true;
        }
        detail::SparseAccumulator<F> acc(f_, width);
        for (const auto& v : gens) {
            for (const auto& [idx, x] : v) left_mul(idx % n_, x, prev_gens[idx / n_], acc);
            if (!acc.take().empty()) return false;
        }
        return true;
    }

    const StructureAlgebra& a_;
    F f_;
    TorOptions opts_;
    std::size_t n_;
    std::size_t cap_ = 0;
    std::vector<std::size_t> off_;
    std::vector<std::pair<std::uint32_t, V>> terms_;
    std::vector<V> aug_;
};

}  // namespace

TorReport tor_dims(const StructureAlgebra& a, const TorOptions& opts) {
    return detail::with_field(a.ring(), [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        return Resolver<F>(a, f, opts).run();
    });
}

TorReport cyclic_group_oracle(std::size_t n, const Ring& ring, std::size_t qmax) {
    if (n == 0) throw std::invalid_argument("cyclic group of order 0");
    // Left multiplication matrices on the basis g^0 .. g^{n-1}.
    auto regular = [&](const std::vector<Scalar>& x) {
        Matrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m((i + j) % n, j) += x[i];
        return m;
    };
    std::vector<Scalar> gm1(n, ring.zero()), norm(n, ring.one());
    gm1[0] = gm1[0] - ring.one();
    if (n > 1) gm1[1] = gm1[1] + ring.one();
    else gm1[0] = ring.zero();
    const Matrix d_odd = regular(gm1), d_even = regular(norm);

    TorReport r;
    r.ring = ring.name();
    r.qmax = qmax;
    // Exactness: im d_1 = ker aug, and consecutive differentials compose to zero with complementary ranks.
    const std::size_t r_odd = rank(d_odd), r_even = rank(d_even);
    r.complex_ok = r_odd == n - 1 && r_odd + r_even == n && (d_odd * d_even).is_zero() && (d_even * d_odd).is_zero();
    // aug(g - 1) = 0 and aug(N) = n.
    const std::size_t t_odd = 0, t_even = ring.from_int(static_cast<long>(n)).is_zero() ? 0 : 1;
    for (std::size_t q = 0; q <= qmax; ++q) {
        r.generators.push_back(1);
        const std::size_t below = q == 0 ? 0 : (q % 2 == 1 ? t_odd : t_even);
        const std::size_t above = (q + 1) % 2 == 1 ? t_odd : t_even;
        r.dims.push_back(1 - below - above);
    }
    return r;
}

}  // namespace diagcell
