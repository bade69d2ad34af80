#include "enbc/textio.hpp"

#include <cctype>
#include <sstream>

namespace enbc {

namespace detail {

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail(Errc::BadEntry, "expected a number in polynomial text");
        return s.substr(start, i - start);
    }
};

} // namespace

std::vector<ParsedTerm> parse_poly_text(const std::string& text) {
    Lexer lx{text};
    std::vector<ParsedTerm> terms;
    if (lx.done()) fail(Errc::BadEntry, "empty polynomial text");
    bool first = true;
    while (!lx.done()) {
        ParsedTerm term;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            term.sign = c == '-' ? -1 : 1;
        } else if (!first) {
            fail(Errc::BadEntry, "expected '+' or '-' between terms");
        }
        first = false;

        bool saw_factor = false;
        for (;;) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                if (!term.coeff.empty() || saw_factor)
                    fail(Errc::BadEntry, "misplaced coefficient in polynomial text");
                term.coeff = lx.number();
                if (lx.peek() == '/') {
                    lx.take();
                    term.coeff += "/" + lx.number();
                }
            } else if (p == 'x' || p == 'y') {
                lx.take();
                int index = std::stoi(lx.number());
                int exp = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    exp = std::stoi(lx.number());
                }
                term.factors.push_back({p, {index, exp}});
                saw_factor = true;
            } else {
                fail(Errc::BadEntry, std::string("unexpected character '") + p +
                                         "' in polynomial text");
            }
            if (lx.peek() == '*') {
                lx.take();
                continue;
            }
            break;
        }
        if (term.coeff.empty() && !saw_factor)
            fail(Errc::BadEntry, "term with neither coefficient nor variables");
        terms.push_back(std::move(term));
        if (lx.done()) break;
        char nxt = lx.peek();
        if (nxt != '+' && nxt != '-')
            fail(Errc::BadEntry, "expected '+' or '-' between terms");
    }
    return terms;
}

} // namespace detail

Monomial parse_monomial(const std::string& text, int n) {
    auto terms = detail::parse_poly_text(text);
    if (terms.size() != 1 || terms[0].sign != 1 || !terms[0].coeff.empty())
        fail(Errc::BadEntry, "text is not a single monomial");
    Monomial m = Monomial::one(n);
    for (const auto& [letter, ie] : terms[0].factors) {
        auto [index, exp] = ie;
        if (index < 0 || index > n) fail(Errc::BadEntry, "variable index out of range");
        m = m.times_var(letter == 'x' ? index : n + 1 + index, exp);
    }
    return m;
}

std::string vertex_name(const Vertex& v) {
    return (v.tag == Vertex::Tag::X ? "x" : "y") + std::to_string(v.index);
}

std::vector<std::string> facet_names(const SimplicialComplex& c, Mask facet) {
    std::vector<std::string> out;
    for (int code : mask_to_indices(facet))
        out.push_back(c.bigraded ? vertex_name(c.label(code)) : std::to_string(code));
    return out;
}

std::string facet_to_string(const SimplicialComplex& c, Mask facet) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& name : facet_names(c, facet)) {
        if (!first) os << ", ";
        first = false;
        os << name;
    }
    os << '}';
    return os.str();
}

} // namespace enbc
