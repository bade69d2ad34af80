#ifndef ENBC_KIT_TEXTIO_HPP
#define ENBC_KIT_TEXTIO_HPP

#include <string>
#include <vector>

#include "enbc/complexes.hpp"
#include "enbc/monomial.hpp"
#include "enbc/multipoly.hpp"
#include "enbc/scalar.hpp"

namespace enbc {

/// Canonical polynomial text: terms in descending term order, "-"/"+"
/// separators, unit coefficients omitted, e.g. "y1*y3 - y0*y3 + y0*y1".
template <class K>
std::string poly_to_string(const MultiPoly<K>& p, const TermOrder& ord) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(ord)) {
        bool neg = is_negative(c);
        K mag = neg ? K(-c) : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_one())
            out += scalar_to_string(mag);
        else if (is_one(mag))
            out += m.to_string();
        else
            out += scalar_to_string(mag) + "*" + m.to_string();
    }
    return out;
}

namespace detail {

struct ParsedTerm {
    int sign = 1;
    std::string coeff;                          // empty means 1
    std::vector<std::pair<char, std::pair<int, int>>> factors; // (letter, (index, exponent))
};

std::vector<ParsedTerm> parse_poly_text(const std::string& text);

} // namespace detail

/// Inverse of poly_to_string; accepts any sign/spacing-normalized variant
/// and round-trips the canonical form exactly.
template <class K>
MultiPoly<K> parse_poly(const std::string& text, int n, const ScalarField& field) {
    MultiPoly<K> p(n);
    for (const auto& term : detail::parse_poly_text(text)) {
        Monomial m = Monomial::one(n);
        for (const auto& [letter, ie] : term.factors) {
            auto [index, exp] = ie;
            if (index < 0 || index > n)
                fail(Errc::BadEntry, "variable index out of range in polynomial text");
            m = m.times_var(letter == 'x' ? index : n + 1 + index, exp);
        }
        K c = parse_scalar<K>(term.coeff.empty() ? "1" : term.coeff, field);
        if (term.sign < 0) c = -c;
        p.add_term(std::move(m), std::move(c));
    }
    return p;
}

Monomial parse_monomial(const std::string& text, int n);

std::string vertex_name(const Vertex& v);

/// "{x2, x4, x5, y0}" or "{0, 1, 2}" for plain complexes; vertices sorted
/// by code (x-block before y-block).
std::string facet_to_string(const SimplicialComplex& c, Mask facet);

std::vector<std::string> facet_names(const SimplicialComplex& c, Mask facet);

} // namespace enbc

#endif // ENBC_KIT_TEXTIO_HPP
