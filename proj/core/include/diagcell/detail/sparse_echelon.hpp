#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace diagcell::detail {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::value_type>>;

// Dense value array plus a min-heap of touched positions.
template <class F>
class SparseAccumulator {
public:
    using V = typename F::value_type;

    SparseAccumulator(const F& field, std::size_t size)
        : f_(field), values_(size, field.zero()), queued_(size, 0) {}

    void resize(std::size_t size) {
        if (size > values_.size()) {
            values_.resize(size, f_.zero());
            queued_.resize(size, 0);
        }
    }

    void add(std::uint32_t i, const V& v) {
        values_[i] = f_.add(values_[i], v);
        if (!queued_[i]) {
            queued_[i] = 1;
            heap_.push(i);
        }
    }

    void load(const SparseVec<F>& v) {
        for (const auto& [i, x] : v) add(i, x);
    }

    // this -= c * v
    void axpy(const V& c, const SparseVec<F>& v) {
        for (const auto& [i, x] : v) add(i, f_.neg(f_.mul(c, x)));
    }

    // Smallest position holding a nonzero value; clears zero positions it passes.
    bool peek_min(std::uint32_t& idx) {
        while (!heap_.empty()) {
            std::uint32_t i = heap_.top();
            if (!f_.is_zero(values_[i])) {
                idx = i;
                return true;
            }
            heap_.pop();
            queued_[i] = 0;
        }
        return false;
    }

    const V& at(std::uint32_t i) const { return values_[i]; }

    // Drains the accumulator into a sorted sparse vector.
    SparseVec<F> take() {
        SparseVec<F> out;
        while (!heap_.empty()) {
            std::uint32_t i = heap_.top();
            heap_.pop();
            queued_[i] = 0;
            if (!f_.is_zero(values_[i])) out.emplace_back(i, values_[i]);
            values_[i] = f_.zero();
        }
        return out;
    }

    void clear() { take(); }

private:
    F f_;
    std::vector<V> values_;
    std::vector<char> queued_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

// Row echelon basis of a growing subspace; rows are monic at their leading
// column. Optionally tracks, for each row, the combination of inserted
// vectors ("tags") that produced it, so dependent insertions yield relations.
template <class F>
class SparseEchelon {
public:
    using V = typename F::value_type;

    SparseEchelon(const F& field, std::size_t ncols, std::size_t ntags = 0)
        : f_(field), pivot_row_(ncols, -1), acc_(field, ncols), tag_acc_(field, ntags) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return pivot_row_.size(); }

    void grow_tags(std::size_t ntags) { tag_acc_.resize(ntags); }

    bool contains(const SparseVec<F>& v) {
        acc_.load(v);
        bool zero = reduce_leading(false);
        acc_.clear();
        return zero;
    }

    // Residual of v modulo the span, fully reduced against existing pivots.
    SparseVec<F> residual(const SparseVec<F>& v) {
        acc_.load(v);
        SparseVec<F> out;
        std::uint32_t c;
        while (acc_.peek_min(c)) {
            V coeff = acc_.at(c);
            int r = pivot_row_[c];
            if (r >= 0) {
                acc_.axpy(coeff, rows_[r].vec);
            } else {
                out.emplace_back(c, coeff);
                acc_.add(c, f_.neg(coeff));
            }
        }
        return out;
    }

    // Returns true when v was independent and has been added.
    bool insert(const SparseVec<F>& v) {
        acc_.load(v);
        if (reduce_leading(false)) {
            acc_.clear();
            return false;
        }
        push_row(acc_.take(), {});
        return true;
    }

    // Tagged insertion. When v is dependent, *relation receives the tag
    // combination that reduces to zero; otherwise a new row is stored.
    bool insert(const SparseVec<F>& v, const SparseVec<F>& tag, SparseVec<F>* relation) {
        acc_.load(v);
        tag_acc_.load(tag);
        bool zero = reduce_leading(true);
        if (zero) {
            acc_.clear();
            if (relation) *relation = tag_acc_.take();
            else tag_acc_.clear();
            return false;
        }
        push_row(acc_.take(), tag_acc_.take());
        return true;
    }

private:
    struct Row {
        SparseVec<F> vec;
        SparseVec<F> tag;
    };

    // Eliminates leading entries until the leading column has no pivot.
    // Returns true if the accumulator became zero.
    bool reduce_leading(bool with_tags) {
        std::uint32_t c;
        while (acc_.peek_min(c)) {
            int r = pivot_row_[c];
            if (r < 0) return false;
            V coeff = acc_.at(c);
            acc_.axpy(coeff, rows_[r].vec);
            if (with_tags) tag_acc_.axpy(coeff, rows_[r].tag);
        }
        return true;
    }

    void push_row(SparseVec<F> vec, SparseVec<F> tag) {
        V inv = f_.inv(vec.front().second);
        if (!(vec.front().second == f_.one())) {
            for (auto& e : vec) e.second = f_.mul(e.second, inv);
            for (auto& e : tag) e.second = f_.mul(e.second, inv);
        }
        pivot_row_[vec.front().first] = static_cast<int>(rows_.size());
        rows_.push_back({std::move(vec), std::move(tag)});
    }

    F f_;
    std::vector<int> pivot_row_;
    std::vector<Row> rows_;
    SparseAccumulator<F> acc_;
    SparseAccumulator<F> tag_acc_;
};

}  // namespace diagcell::detail
