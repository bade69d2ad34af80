#include "enbc/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "enbc/complexes.hpp"
#include "enbc/hilbert.hpp"
#include "enbc/series.hpp"
#include "enbc/textio.hpp"
#include "enbc/verify.hpp"

namespace enbc {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kCommandNames = {
    "circuits", "broken-circuits", "chi",    "nbc",    "rnbc",       "enbc",
    "ideal",    "initial-ideal",   "groebner", "sr-ideal", "hilbert", "expand",
    "cohomology", "kclass",        "verify",
};

namespace {

std::string finish_text(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

std::string finish_json(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string indices_to_text(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_to_indices(m)) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(i);
    }
    return out + "}";
}

ordered_json facets_json(const SimplicialComplex& c) {
    ordered_json arr = ordered_json::array();
    for (Mask f : c.facets) {
        if (c.bigraded) {
            arr.push_back(facet_names(c, f));
        } else {
            arr.push_back(mask_to_indices(f));
        }
    }
    return arr;
}

ordered_json expansion_json(const std::map<std::pair<int, int>, Rational>& table) {
    ordered_json arr = ordered_json::array();
    std::vector<std::pair<std::pair<int, int>, Rational>> v(table.begin(), table.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    for (const auto& [k, val] : v)
        arr.push_back({{"q", k.first}, {"t", k.second}, {"value", val.get_str()}});
    return arr;
}

ordered_json cohom_json(const CohomClass& c) {
    ordered_json arr = ordered_json::array();
    for (auto it = c.c.rbegin(); it != c.c.rend(); ++it)
        arr.push_back({{"a", it->first.first}, {"b", it->first.second}, {"mult", it->second}});
    return arr;
}

ordered_json report_json(const VerifyReport& r) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        const char* status = c.status == CheckResult::Status::Pass   ? "pass"
                             : c.status == CheckResult::Status::Fail ? "fail"
                                                                     : "skipped";
        checks.push_back({{"name", c.name},
                          {"status", status},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"note", c.note},
                          {"seconds", c.seconds}});
    }
    return {{"arrangement", r.arrangement}, {"ok", r.ok()}, {"checks", checks}};
}

template <class K>
CommandResult run_typed(const std::string& cmd, const ArrangementInput& input,
                        const CommandOptions& opt) {
    Matroid<K> m = make_matroid<K>(input);
    OrderSpec order = opt.order_override ? OrderSpec::from_permutation(*opt.order_override)
                                         : input.order_spec();
    int n = m.ground_size() - 1;
    int r = m.rank() - 1;
    TermOrder term_order(order, n);
    bool json = opt.format == "json";
    ordered_json doc{{"name", input.name}, {"command", cmd}};
    CommandResult res;

    auto facet_lines = [&](const SimplicialComplex& c) {
        std::vector<std::string> lines;
        for (Mask f : c.facets)
            lines.push_back(c.bigraded ? facet_to_string(c, f) : indices_to_text(f));
        return lines;
    };
    auto poly_lines = [&](const std::vector<MultiPoly<K>>& polys) {
        std::vector<std::string> lines;
        for (const auto& p : polys) lines.push_back(poly_to_string(p, term_order));
        return lines;
    };
    auto monomial_lines = [&](const MonomialIdeal& ideal) {
        std::vector<std::string> lines;
        for (const auto& g : ideal.gens) lines.push_back(g.to_string());
        return lines;
    };

    if (cmd == "circuits") {
        std::vector<std::string> lines;
        ordered_json arr = ordered_json::array();
        for (const auto& c : m.circuits()) {
            MultiPoly<K> rel(n);
            auto idx = mask_to_indices(c.support);
            for (size_t k = 0; k < idx.size(); ++k)
                rel.add_term(Monomial::x(n, idx[k]), c.coeffs[k]);
            std::string text = poly_to_string(rel, term_order);
            lines.push_back(indices_to_text(c.support) + ": " + text);
            std::vector<std::string> coeffs;
            for (const auto& a : c.coeffs) coeffs.push_back(scalar_to_string(a));
            arr.push_back(
                {{"support", mask_to_indices(c.support)}, {"relation", text}, {"coefficients", coeffs}});
        }
        doc["circuits"] = arr;
        res.output = json ? finish_json(doc) : finish_text(lines);
    } else if (cmd == "broken-circuits") {
        std::vector<std::string> lines;
        ordered_json arr = ordered_json::array();
        for (Mask b : m.broken_circuits()) {
            lines.push_back(indices_to_text(b));
            arr.push_back(mask_to_indices(b));
        }
        doc["broken_circuits"] = arr;
        res.output = json ? finish_json(doc) : finish_text(lines);
    } else if (cmd == "chi") {
        std::string chi = m.mobius_char_poly().to_string();
        doc["chi"] = chi;
        res.output = json ? finish_json(doc) : chi + "\n";
    } else if (cmd == "nbc" || cmd == "rnbc" || cmd == "enbc") {
        SimplicialComplex c = cmd == "nbc"    ? nbc_complex(m)
                              : cmd == "rnbc" ? rnbc_complex(m)
                                              : enbc_complex(m, order);
        doc["facets"] = facets_json(c);
        res.output = json ? finish_json(doc) : finish_text(facet_lines(c));
    } else if (cmd == "ideal") {
        auto gens = gamma_ideal_generators(m).gens;
        doc["generators"] = poly_lines(gens);
        res.output = json ? finish_json(doc) : finish_text(poly_lines(gens));
    } else if (cmd == "initial-ideal") {
        MonomialIdeal ideal = claimed_initial_generators(m, order);
        doc["generators"] = monomial_lines(ideal);
        res.output = json ? finish_json(doc) : finish_text(monomial_lines(ideal));
    } else if (cmd == "groebner") {
        auto gb = buchberger(gamma_ideal_generators(m), term_order, opt.budget);
        doc["basis"] = poly_lines(gb);
        res.output = json ? finish_json(doc) : finish_text(poly_lines(gb));
    } else if (cmd == "sr-ideal") {
        MonomialIdeal ideal = stanley_reisner_ideal(enbc_complex(m, order));
        doc["generators"] = monomial_lines(ideal);
        res.output = json ? finish_json(doc) : finish_text(monomial_lines(ideal));
    } else if (cmd == "hilbert") {
        BivarRational h = closed_hilbert_series(m.mobius_char_poly(), r);
        doc["numerator"] = h.num().to_string();
        doc["denominator"] = h.den().to_string();
        res.output = json ? finish_json(doc) : h.to_string() + "\n";
    } else if (cmd == "expand") {
        auto table = expand(closed_hilbert_series(m.mobius_char_poly(), r), opt.bound);
        doc["table"] = expansion_json(table);
        if (json) {
            res.output = finish_json(doc);
        } else {
            std::vector<std::string> lines;
            for (const auto& item : expansion_json(table)) {
                std::string value = item["value"];
                lines.push_back("(" + item["q"].dump() + "," + item["t"].dump() + "): " + value);
            }
            res.output = finish_text(lines);
        }
    } else if (cmd == "cohomology") {
        CohomClass c = cohomology_class_from_complex(enbc_complex(m, order));
        doc["class"] = cohom_json(c);
        doc["text"] = c.to_string();
        res.output = json ? finish_json(doc) : c.to_string() + "\n";
    } else if (cmd == "kclass") {
        KClass k = k_class_reciprocal_plane(m.mobius_char_poly(), r);
        doc["coefficients"] = k.coeff;
        doc["text"] = k.to_string();
        res.output = json ? finish_json(doc) : k.to_string() + "\n";
    } else if (cmd == "verify") {
        VerifyReport report = verify_all(m, order, opt.bound, opt.budget);
        report.arrangement = input.name;
        res.verify_failed = !report.ok();
        res.output = json ? finish_json(report_json(report)) : report_to_text(report);
    } else {
        fail(Errc::UnknownCommand, "unknown command '" + cmd + "'");
    }
    return res;
}

} // namespace

CommandResult run_command(const std::string& cmd, const ArrangementInput& input,
                          const CommandOptions& opt) {
    if (std::find(kCommandNames.begin(), kCommandNames.end(), cmd) == kCommandNames.end())
        fail(Errc::UnknownCommand, "unknown command '" + cmd + "'");
    if (opt.format != "text" && opt.format != "json")
        fail(Errc::BadEntry, "format must be 'text' or 'json'");
    return input.field.is_prime_field() ? run_typed<Fp>(cmd, input, opt)
                                        : run_typed<Rational>(cmd, input, opt);
}

} // namespace enbc
