#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace diagcell {

// Bijection of {0..t-1}; composition reads right to left: (a*b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(std::size_t t);
    // i -> i + shift (mod t)
    static Permutation cyclic(std::size_t t, std::size_t shift);
    // All of Sigma_t in lexicographic order of the image array.
    static std::vector<Permutation> all(std::size_t t);
    // C_t as the powers of the t-cycle, identity first. C_0 is trivial.
    static std::vector<Permutation> cyclic_group(std::size_t t);

    std::size_t degree() const { return image_.size(); }
    int operator()(std::size_t i) const { return image_[i]; }
    const std::vector<int>& image() const { return image_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    bool is_identity() const;
    // True when this is a power of i -> i+1 (mod t).
    bool is_cyclic() const;

    // One-based image list, e.g. "(3 1 2)".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

}  // namespace diagcell
