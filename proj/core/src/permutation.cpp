#include "diagcell/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diagcell {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(std::size_t t) {
    std::vector<int> im(t);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cyclic(std::size_t t, std::size_t shift) {
    std::vector<int> im(t);
    for (std::size_t i = 0; i < t; ++i) im[i] = static_cast<int>((i + shift) % t);
    return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(std::size_t t) {
    std::vector<Permutation> out;
    std::vector<int> im(t);
    std::iota(im.begin(), im.end(), 0);
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> Permutation::cyclic_group(std::size_t t) {
    if (t == 0) return {Permutation()};
    std::vector<Permutation> out;
    for (std::size_t k = 0; k < t; ++k) out.push_back(cyclic(t, k));
    return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("permutation degrees differ");
    std::vector<int> im(degree());
    for (std::size_t i = 0; i < degree(); ++i) im[i] = image_[o.image_[i]];
    Permutation r;
    r.image_ = std::move(im);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(degree());
    for (std::size_t i = 0; i < degree(); ++i) im[image_[i]] = static_cast<int>(i);
    Permutation r;
    r.image_ = std::move(im);
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (image_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_cyclic() const {
    if (degree() == 0) return true;
    std::size_t shift = static_cast<std::size_t>(image_[0]);
    return *this == cyclic(degree(), shift);
}

std::string Permutation::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degree(); ++i) {
        if (i) s += ' ';
        s += std::to_string(image_[i] + 1);
    }
    return s + ")";
}

}  // namespace diagcell
