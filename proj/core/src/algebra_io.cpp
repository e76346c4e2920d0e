#include "diagcell/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace diagcell {

namespace {

constexpr const char* kMagic = "diagcell-algebra 1";

std::string term_text(const Term& t) { return std::to_string(t.index) + ":" + t.coeff.to_plain_string(); }

Term parse_term(const std::string& tok, const Ring& ring) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("algebra file: bad term '" + tok + "'");
    return {static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon))), ring.parse_element(tok.substr(colon + 1))};
}

std::string expect_line(std::istream& in, const std::string& key) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind(key, 0) != 0) throw std::invalid_argument("algebra file: expected '" + key + "', got '" + line + "'");
        return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
    }
    throw std::invalid_argument("algebra file: missing '" + key + "'");
}

}  // namespace

void dump_algebra(const StructureAlgebra& a, std::ostream& out) {
    out << kMagic << "\n";
    out << "family " << family_name(a.family()) << "\n";
    out << "n " << a.n() << "\n";
    out << "ring " << a.ring().name() << "\n";
    out << "delta " << a.delta().to_plain_string() << "\n";
    out << "dim " << a.dim() << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        out << "basis " << i << " " << a.level(i) << " " << a.aug(i).to_plain_string() << " " << a.star(i) << " "
            << a.label(i) << "\n";
    out << "unit";
    for (const auto& t : a.unit()) out << " " << term_text(t);
    out << "\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto pr = a.product(i, j);
            if (pr.empty()) continue;
            out << "product " << i << " " << j;
            for (const auto& t : pr) out << " " << term_text(t);
            out << "\n";
        }
    out << "end\n";
}

StructureAlgebra load_algebra(std::istream& in) {
    std::string magic;
    std::getline(in, magic);
    if (magic != kMagic) throw std::invalid_argument("algebra file: bad header");
    Family family = parse_family(expect_line(in, "family"));
    std::size_t n = std::stoul(expect_line(in, "n"));
    Ring ring = Ring::parse(expect_line(in, "ring"));
    Scalar delta = ring.parse_element(expect_line(in, "delta"));
    std::size_t dim = std::stoul(expect_line(in, "dim"));

    StructureAlgebra a(family, n, ring, delta);
    std::vector<std::uint32_t> st(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::istringstream ls(expect_line(in, "basis"));
        std::size_t idx;
        int level;
        std::string aug;
        std::uint32_t s;
        ls >> idx >> level >> aug >> s;
        if (!ls || idx != i || s >= dim) throw std::invalid_argument("algebra file: bad basis line " + std::to_string(i));
        std::string label;
        std::getline(ls >> std::ws, label);
        std::optional<BrauerDiagram> d;
        if (label.rfind("n=", 0) == 0) d = parse_diagram(label);
        a.add_basis(label, level, std::move(d), ring.parse_element(aug));
        st[i] = s;
    }
    a.set_star(std::move(st));
    {
        std::istringstream ls(expect_line(in, "unit"));
        std::vector<Term> u;
        std::string tok;
        while (ls >> tok) u.push_back(parse_term(tok, ring));
        a.set_unit(std::move(u));
    }

    std::vector<std::vector<Term>> cells(dim * dim);
    std::string line;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") {
            ended = true;
            break;
        }
        std::istringstream ls(line);
        std::string key;
        std::size_t i, j;
        ls >> key >> i >> j;
        if (key != "product" || !ls || i >= dim || j >= dim) throw std::invalid_argument("algebra file: bad line '" + line + "'");
        std::string tok;
        while (ls >> tok) {
            Term t = parse_term(tok, ring);
            if (t.index >= dim) throw std::invalid_argument("algebra file: term index out of range");
            cells[i * dim + j].push_back(std::move(t));
        }
    }
    if (!ended) throw std::invalid_argument("algebra file: missing 'end'");
    std::vector<std::size_t> off{0};
    std::vector<Term> terms;
    for (auto& c : cells) {
        for (auto& t : c) terms.push_back(std::move(t));
        off.push_back(terms.size());
    }
    a.set_table(std::move(off), std::move(terms));
    return a;
}

}  // namespace diagcell
