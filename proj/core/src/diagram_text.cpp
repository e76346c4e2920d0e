#include "diagcell/brauer_diagram.hpp"

#include <cctype>
#include <stdexcept>

namespace diagcell {

namespace {

std::string label(int v, int n) {
    return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "'";
}

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument(std::string("diagram text: expected '") + c + "' at offset " + std::to_string(i));
    }
    int number() {
        skip();
        std::size_t start = i;
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw std::invalid_argument("diagram text: number too large");
            ++i;
        }
        if (i == start) throw std::invalid_argument("diagram text: expected a number at offset " + std::to_string(start));
        return v;
    }
};

}  // namespace

std::string BrauerDiagram::to_string() const {
    const int m = static_cast<int>(n());
    std::string s = "n=" + std::to_string(m) + ";";
    if (m > 0) s += " ";
    for (int v = 0; v < 2 * m; ++v)
        if (partner_[v] > v) s += "[" + label(v, m) + " " + label(partner_[v], m) + "]";
    return s;
}

BrauerDiagram parse_diagram(std::string_view text) {
    Cursor c{text};
    c.expect('n');
    c.expect('=');
    int n = c.number();
    c.expect(';');
    std::vector<int> p(2 * n, -1);
    auto point = [&]() {
        int v = c.number();
        bool primed = c.eat('\'');
        if (v < 1 || v > n) throw std::invalid_argument("diagram text: point out of range");
        return primed ? n + v - 1 : v - 1;
    };
    int pairs = 0;
    while (c.eat('[')) {
        int a = point();
        int b = point();
        c.expect(']');
        if (a == b || p[a] != -1 || p[b] != -1) throw std::invalid_argument("diagram text: point used twice");
        p[a] = b;
        p[b] = a;
        ++pairs;
    }
    c.skip();
    if (c.i != text.size()) throw std::invalid_argument("diagram text: trailing characters");
    if (pairs != n) throw std::invalid_argument("diagram text: expected " + std::to_string(n) + " pairs");
    return BrauerDiagram(std::move(p));
}

}  // namespace diagcell
