#ifndef ENBC_KIT_VERIFY_HPP
#define ENBC_KIT_VERIFY_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "enbc/buchberger.hpp"
#include "enbc/complexes.hpp"
#include "enbc/hilbert.hpp"
#include "enbc/ideals.hpp"
#include "enbc/matroid.hpp"
#include "enbc/series.hpp"
#include "enbc/textio.hpp"

namespace enbc {

struct CheckResult {
    enum class Status { Pass, Fail, Skip };

    std::string name;
    Status status = Status::Pass;
    std::string expected;
    std::string actual;
    std::string note; // skip reason or failure context
    double seconds = 0.0;
};

struct VerifyReport {
    std::string arrangement;
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckResult::Status::Fail) return false;
        return true;
    }
};

std::string report_to_text(const VerifyReport& r);

namespace detail {

class CheckRunner {
public:
    explicit CheckRunner(VerifyReport& report) : report_(report) {}

    /// Runs `body`, which fills expected/actual and returns pass/fail.
    /// Exceptions become failures, except ResourceLimit which skips.
    void run(const std::string& name, const std::function<bool(CheckResult&)>& body) {
        CheckResult res;
        res.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            res.status = body(res) ? CheckResult::Status::Pass : CheckResult::Status::Fail;
        } catch (const Error& e) {
            res.status =
                e.code() == Errc::ResourceLimit ? CheckResult::Status::Skip : CheckResult::Status::Fail;
            res.note = e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(res));
    }

    bool last_passed() const {
        return !report_.checks.empty() && report_.checks.back().status == CheckResult::Status::Pass;
    }

private:
    VerifyReport& report_;
};

inline std::string table_to_string(const BidegreeTable& t) {
    std::ostringstream os;
    for (const auto& [k, v] : t) os << '(' << k.first << ',' << k.second << ")=" << v << ' ';
    return os.str();
}

inline std::string monomials_to_string(const MonomialIdeal& ideal) {
    std::ostringstream os;
    for (size_t i = 0; i < ideal.gens.size(); ++i)
        os << (i ? ", " : "") << ideal.gens[i].to_string();
    return os.str();
}

} // namespace detail

/// The full pipeline: characteristic-polynomial double route, extended
/// complex structure, the three initial-ideal identifications, the
/// Hilbert-series identities, and the class comparison.  Failures are
/// report entries, never exceptions.
template <class K>
VerifyReport verify_all(const Matroid<K>& m, const OrderSpec& order, int bound = 6,
                        long long budget = kDefaultPairBudget) {
    VerifyReport report;
    detail::CheckRunner runner(report);
    int r = m.rank() - 1;
    int n = m.ground_size() - 1;
    TermOrder term_order(order, n);

    UniPoly chi = m.mobius_char_poly();
    auto nbc = nbc_complex(m);
    auto rnbc = rnbc_complex(m);
    auto enbc = enbc_complex(m, order);

    runner.run("chi-mobius-equals-whitney", [&](CheckResult& res) {
        UniPoly whitney = whitney_poly(nbc, r + 1);
        res.expected = chi.to_string();
        res.actual = whitney.to_string();
        return chi == whitney;
    });

    UniPoly chi_bar;
    runner.run("reduced-chi-division", [&](CheckResult& res) {
        chi_bar = m.reduced_char_poly();
        UniPoly whitney = whitney_poly(rnbc, r);
        res.expected = chi_bar.to_string();
        res.actual = whitney.to_string();
        return chi_bar == whitney;
    });

    runner.run("enbc-structure", [&](CheckResult& res) {
        auto rnbc_faces = all_faces(rnbc);
        res.expected = std::to_string(rnbc_faces.size()) + " facets of size " + std::to_string(r + 2);
        bool pure = true, cone = true;
        for (Mask f : enbc.facets) {
            pure = pure && popcount(f) == r + 2;
            cone = cone && contains(f, enbc.ycode(0));
        }
        bool distinct = true;
        for (size_t i = 1; i < enbc.facets.size(); ++i)
            distinct = distinct && enbc.facets[i] != enbc.facets[i - 1];
        auto intervals = jf_partition_core(enbc.n, enbc.facets);
        long long covered = 0;
        for (const auto& iv : intervals) covered += Mask{1} << popcount(iv.top & ~iv.low);
        long long face_total = static_cast<long long>(all_faces(enbc).size());
        res.actual = std::to_string(enbc.facets.size()) + " facets" + (pure ? "" : ", not pure") +
                     (cone ? "" : ", y0 not a cone point") +
                     "; intervals cover " + std::to_string(covered) + "/" +
                     std::to_string(face_total) + " faces";
        return pure && cone && distinct && enbc.facets.size() == rnbc_faces.size() &&
               covered == face_total;
    });

    MonomialIdeal claimed = claimed_initial_generators(m, order);
    runner.run("claimed-equals-stanley-reisner", [&](CheckResult& res) {
        MonomialIdeal sr = stanley_reisner_ideal(enbc);
        res.expected = detail::monomials_to_string(claimed);
        res.actual = detail::monomials_to_string(sr);
        return claimed == sr;
    });

    PolyIdeal<K> gamma = gamma_ideal_generators(m);
    std::vector<MultiPoly<K>> gb;
    bool have_gb = false;
    runner.run("groebner-initial-equals-claimed", [&](CheckResult& res) {
        gb = buchberger(gamma, term_order, budget);
        have_gb = true;
        MonomialIdeal init = initial_ideal(gb, term_order);
        res.expected = detail::monomials_to_string(claimed);
        res.actual = detail::monomials_to_string(init);
        return init == claimed;
    });

    runner.run("leading-witnesses", [&](CheckResult& res) {
        if (!have_gb)
            fail(Errc::ResourceLimit, "requires the Groebner basis from the previous check");
        res.expected = std::to_string(claimed.gens.size()) + " witnesses";
        for (const Monomial& g : claimed.gens) {
            MultiPoly<K> w = leading_witness(m, order, g);
            auto [lt, lc] = w.leading_term(term_order);
            if (lt != g) {
                res.actual = "witness for " + g.to_string() + " leads with " + lt.to_string();
                return false;
            }
            if (!reduce(w, gb, term_order).is_zero()) {
                res.actual = "witness for " + g.to_string() + " is not in the ideal";
                return false;
            }
        }
        res.actual = res.expected;
        return true;
    });

    BivarRational closed = closed_hilbert_series(chi, r);
    runner.run("sr-series-equals-closed-series", [&](CheckResult& res) {
        BivarRational sr = sr_hilbert_series(bigraded_f_vector(enbc));
        res.expected = closed.to_string();
        res.actual = sr.to_string();
        return sr.equals(closed);
    });

    runner.run("q0-equals-orlik-terao", [&](CheckResult& res) {
        UniRational at0 = specialize_q0(closed);
        std::vector<long long> w = face_counts(nbc);
        UniRational ot = orlik_terao_series(w);
        res.expected = ot.to_string();
        res.actual = at0.to_string();
        return at0.equals(ot);
    });

    runner.run("expansion-equals-hilbert-oracle", [&](CheckResult& res) {
        auto coeffs = expand(closed, bound);
        BidegreeTable oracle = bigraded_hilbert_function(gamma, bound);
        res.expected = detail::table_to_string(oracle);
        std::ostringstream got;
        bool ok = true;
        for (const auto& [k, v] : oracle) {
            Rational c = coeffs.at(k);
            ok = ok && c == Rational(static_cast<long>(v));
            got << '(' << k.first << ',' << k.second << ")=" << c.get_str() << ' ';
        }
        res.actual = got.str();
        return ok;
    });

    runner.run("class-equals-huh-katz", [&](CheckResult& res) {
        CohomClass from_complex = cohomology_class_from_complex(enbc);
        CohomClass from_chi = huh_katz_class(chi_bar, r);
        res.expected = from_chi.to_string();
        res.actual = from_complex.to_string();
        return from_complex == from_chi;
    });

    return report;
}

} // namespace enbc

#endif // ENBC_KIT_VERIFY_HPP
