#pragma once

#include "diagcell/brauer_diagram.hpp"
#include "diagcell/scalar.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diagcell {

enum class Family { brauer, tl, jones, group_cyclic };

std::string family_name(Family f);
Family parse_family(std::string_view name);
StateFamily state_family(Family f);
// G(t) for the family's datum: Sigma_t, C_t or the trivial group.
std::vector<Permutation> level_group(Family f, std::size_t t);

struct Term {
    std::uint32_t index;
    Scalar coeff;
};

// Finite basis with a dense table of sparse products.
class StructureAlgebra {
public:
    StructureAlgebra(Family family, std::size_t n, Ring ring, Scalar delta);

    Family family() const { return family_; }
    std::size_t n() const { return n_; }
    const Ring& ring() const { return ring_; }
    const Scalar& delta() const { return delta_; }
    std::size_t dim() const { return labels_.size(); }

    const std::string& label(std::size_t i) const { return labels_[i]; }
    // Defect count of a diagram basis element; the exponent for group elements.
    int level(std::size_t i) const { return level_[i]; }
    bool has_diagrams() const { return !diagrams_.empty(); }
    const BrauerDiagram& diagram(std::size_t i) const { return diagrams_[i]; }
    std::optional<std::uint32_t> index_of(const BrauerDiagram& d) const;
    // Level values present among the basis, ascending.
    std::vector<int> levels() const;

    std::span<const Term> product(std::size_t i, std::size_t j) const;
    const std::vector<Term>& unit() const { return unit_; }
    const Scalar& aug(std::size_t i) const { return aug_[i]; }
    std::uint32_t star(std::size_t i) const { return star_[i]; }
    // Basis index in the algebra this one was cut down from (quotients).
    std::uint32_t parent_index(std::size_t i) const { return parent_index_[i]; }

    // Copy with the (i, j) product replaced; used for fault injection.
    StructureAlgebra with_product(std::size_t i, std::size_t j, std::vector<Term> terms) const;

    // Low-level assembly used by the builders and the loader.
    void add_basis(std::string label, int level, std::optional<BrauerDiagram> diagram, Scalar aug);
    // CSR layout: products of (i, j) live in terms[offsets[i*dim+j] .. offsets[i*dim+j+1]).
    void set_table(std::vector<std::size_t> offsets, std::vector<Term> terms);
    void set_unit(std::vector<Term> unit) { unit_ = std::move(unit); }
    void set_star(std::vector<std::uint32_t> star) { star_ = std::move(star); }
    void set_parent_index(std::vector<std::uint32_t> idx) { parent_index_ = std::move(idx); }

private:
    Family family_;
    std::size_t n_;
    Ring ring_;
    Scalar delta_;
    std::vector<std::string> labels_;
    std::vector<int> level_;
    std::vector<BrauerDiagram> diagrams_;
    std::map<std::vector<int>, std::uint32_t> diagram_index_;
    std::vector<std::size_t> offsets_;
    std::vector<Term> terms_;
    std::vector<Term> unit_;
    std::vector<Scalar> aug_;
    std::vector<std::uint32_t> star_;
    std::vector<std::uint32_t> parent_index_;
};

// Sparse combination of basis elements of one owner algebra.
class AlgebraElement {
public:
    explicit AlgebraElement(const StructureAlgebra& owner) : owner_(&owner) {}
    static AlgebraElement basis(const StructureAlgebra& owner, std::size_t i);
    static AlgebraElement unit(const StructureAlgebra& owner);

    const StructureAlgebra& owner() const { return *owner_; }
    const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
    Scalar coeff(std::uint32_t i) const;
    bool is_zero() const { return terms_.empty(); }

    void add(std::uint32_t i, const Scalar& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;

    std::string to_string() const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    void check_owner(const AlgebraElement& o) const;
    const StructureAlgebra* owner_;
    std::map<std::uint32_t, Scalar> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
Scalar apply_aug(const AlgebraElement& a);
AlgebraElement star_elem(const AlgebraElement& a);

struct BuildOptions {
    std::size_t max_dim = 5000;
};

// Basis ordered by defect count descending, then (p, sigma, q) in datum order;
// the identity diagram is always index 0.
StructureAlgebra build_algebra(Family family, std::size_t n, const Scalar& delta, const Ring& ring,
                               const BuildOptions& opts = {});

// Quotient by I_X for the downward-closed set X = {t : t < threshold}.
StructureAlgebra quotient_below(const StructureAlgebra& a, int threshold);
// Quotient by I_X for an explicit set of levels; X must be downward closed.
StructureAlgebra quotient(const StructureAlgebra& a, const std::vector<int>& x);

void dump_algebra(const StructureAlgebra& a, std::ostream& out);
StructureAlgebra load_algebra(std::istream& in);

// Table-level checks shared by tests and the verifier.
bool check_associative(const StructureAlgebra& a, std::string* witness = nullptr);
bool check_unit(const StructureAlgebra& a, std::string* witness = nullptr);
bool check_aug_multiplicative(const StructureAlgebra& a, std::string* witness = nullptr);
bool check_star_antiautomorphism(const StructureAlgebra& a, std::string* witness = nullptr);

}  // namespace diagcell
