#include "enbc/series.hpp"

#include <algorithm>
#include <sstream>

namespace enbc {

// --- BivarPoly ---

BivarPoly BivarPoly::constant(Rational c) { return monomial(std::move(c), 0, 0); }

BivarPoly BivarPoly::monomial(Rational c, int dq, int dt) {
    BivarPoly p;
    p.add(dq, dt, std::move(c));
    return p;
}

BivarPoly BivarPoly::one_minus_q() { return constant(1) - monomial(1, 1, 0); }
BivarPoly BivarPoly::one_minus_t() { return constant(1) - monomial(1, 0, 1); }
BivarPoly BivarPoly::one_minus_qt() { return constant(1) - monomial(1, 1, 1); }

Rational BivarPoly::coeff(int a, int b) const {
    auto it = c_.find({a, b});
    return it == c_.end() ? Rational(0) : it->second;
}

void BivarPoly::add(int a, int b, Rational c) {
    if (enbc::is_zero(c)) return;
    auto [it, fresh] = c_.emplace(std::pair{a, b}, c);
    if (!fresh) {
        it->second += c;
        if (enbc::is_zero(it->second)) c_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, v] : b.c_) r.add(k.first, k.second, v);
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
    if (enbc::is_zero(c)) return {};
    BivarPoly r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, v * c);
    return r;
}

BivarPoly BivarPoly::pow(int k) const {
    BivarPoly r = constant(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

std::pair<int, int> BivarPoly::monomial_content() const {
    if (is_zero()) return {0, 0};
    int mq = c_.begin()->first.first; // keys sorted by q-degree first
    int mt = c_.begin()->first.second;
    for (const auto& [k, v] : c_) mt = std::min(mt, k.second);
    return {mq, mt};
}

BivarPoly BivarPoly::shifted(int dq, int dt) const {
    BivarPoly r;
    for (const auto& [k, v] : c_) {
        int a = k.first + dq, b = k.second + dt;
        if (a < 0 || b < 0) fail(Errc::NotDivisible, "monomial shift below zero");
        r.c_.emplace(std::pair{a, b}, v);
    }
    return r;
}

std::optional<BivarPoly> BivarPoly::divided_exact(const BivarPoly& d) const {
    if (d.is_zero()) fail(Errc::NotDivisible, "division by the zero polynomial");
    BivarPoly rem = *this;
    BivarPoly quot;
    auto lead = [](const BivarPoly& p) { return std::prev(p.c_.end()); }; // lex-largest (q, then t)
    auto dl = lead(d);
    while (!rem.is_zero()) {
        auto rl = lead(rem);
        int a = rl->first.first - dl->first.first;
        int b = rl->first.second - dl->first.second;
        if (a < 0 || b < 0) return std::nullopt;
        Rational f = rl->second / dl->second;
        quot.add(a, b, f);
        rem = rem - d * monomial(f, a, b);
    }
    return quot;
}

UniPoly BivarPoly::at_q0() const {
    std::vector<Rational> coeffs;
    for (const auto& [k, v] : c_) {
        if (k.first != 0) continue;
        if (static_cast<int>(coeffs.size()) <= k.second) coeffs.resize(k.second + 1);
        coeffs[k.second] = v;
    }
    return UniPoly(std::move(coeffs));
}

std::string BivarPoly::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, Rational>> v(c_.begin(), c_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs == 1;
        if (k.first == 0 && k.second == 0) {
            os << abs.get_str();
        } else {
            if (!unit) os << abs.get_str() << '*';
            bool star = false;
            if (k.first > 0) {
                os << 'q';
                if (k.first > 1) os << '^' << k.first;
                star = true;
            }
            if (k.second > 0) {
                if (star) os << '*';
                os << 't';
                if (k.second > 1) os << '^' << k.second;
            }
        }
    }
    return os.str();
}

// --- BivarRational ---

BivarRational::BivarRational(BivarPoly num, BivarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::BadEntry, "zero denominator in a rational function");
    normalize();
}

BivarRational BivarRational::constant(Rational c) {
    return {BivarPoly::constant(std::move(c)), BivarPoly::constant(1)};
}

BivarRational BivarRational::from_poly(BivarPoly p) { return {std::move(p), BivarPoly::constant(1)}; }

void BivarRational::normalize() {
    if (num_.is_zero()) {
        den_ = BivarPoly::constant(1);
        return;
    }
    auto [nq, nt] = num_.monomial_content();
    auto [dq, dt] = den_.monomial_content();
    int cq = std::min(nq, dq), ct = std::min(nt, dt);
    if (cq > 0 || ct > 0) {
        num_ = num_.shifted(-cq, -ct);
        den_ = den_.shifted(-cq, -ct);
    }
    for (const BivarPoly& f :
         {BivarPoly::one_minus_q(), BivarPoly::one_minus_t(), BivarPoly::one_minus_qt()}) {
        for (;;) {
            auto qn = num_.divided_exact(f);
            if (!qn) break;
            auto qd = den_.divided_exact(f);
            if (!qd) break;
            num_ = std::move(*qn);
            den_ = std::move(*qd);
        }
    }
    Rational c = den_.terms().begin()->second; // trailing coefficient
    if (!is_one(c)) {
        num_ = num_.scaled(Rational(1) / c);
        den_ = den_.scaled(Rational(1) / c);
    }
}

BivarRational operator+(const BivarRational& a, const BivarRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

BivarRational operator-(const BivarRational& a, const BivarRational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

BivarRational operator*(const BivarRational& a, const BivarRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

BivarRational BivarRational::pow(int k) const {
    BivarRational r = constant(1);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

bool BivarRational::equals(const BivarRational& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string BivarRational::to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// --- UniRational ---

UniRational::UniRational(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::BadEntry, "zero denominator in a rational function");
    normalize();
}

void UniRational::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational c(0);
    for (int k = 0; k <= den_.degree() && enbc::is_zero(c); ++k) c = den_.coeff(k);
    UniPoly scale = UniPoly::constant(c);
    num_ = num_.divide_exact(scale);
    den_ = den_.divide_exact(scale);
}

UniRational operator+(const UniRational& a, const UniRational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

UniRational operator*(const UniRational& a, const UniRational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

bool UniRational::equals(const UniRational& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string UniRational::to_string() const {
    return "(" + num_.to_string('t') + ") / (" + den_.to_string('t') + ")";
}

// --- Hilbert series ---

BivarRational sr_hilbert_series(const BigradedFaceVector& fv) {
    int max_a = 0, max_b = 0;
    for (const auto& [bi, count] : fv.f) {
        max_a = std::max(max_a, bi.first);
        max_b = std::max(max_b, bi.second);
    }
    std::vector<BivarPoly> pow_q(max_a + 1), pow_t(max_b + 1);
    for (int a = 0; a <= max_a; ++a) pow_q[a] = BivarPoly::one_minus_q().pow(a);
    for (int b = 0; b <= max_b; ++b) pow_t[b] = BivarPoly::one_minus_t().pow(b);

    BivarPoly num;
    for (const auto& [bi, count] : fv.f) {
        auto [a, b] = bi;
        num += BivarPoly::monomial(Rational(static_cast<long>(count)), a, b) * pow_q[max_a - a] * pow_t[max_b - b];
    }
    return {std::move(num), pow_q[max_a] * pow_t[max_b]};
}

BivarRational closed_hilbert_series(const UniPoly& chi, int r) {
    if (chi.degree() != r + 1)
        fail(Errc::DegreeMismatch, "characteristic polynomial degree must be r+1");
    BivarPoly t_minus_1 = BivarPoly::monomial(1, 0, 1) - BivarPoly::constant(1);
    BivarRational u(t_minus_1, BivarPoly::one_minus_q() * BivarPoly::monomial(1, 0, 1));
    BivarRational acc = BivarRational::constant(chi.coeff(r + 1));
    for (int k = r; k >= 0; --k) acc = acc * u + BivarRational::constant(chi.coeff(k));
    BivarRational t_over_t1(BivarPoly::monomial(1, 0, 1), t_minus_1);
    return acc * t_over_t1.pow(r + 1) *
           BivarRational(BivarPoly::constant(1), BivarPoly::one_minus_qt());
}

UniRational specialize_q0(const BivarRational& h) {
    UniPoly den0 = h.den().at_q0();
    if (den0.is_zero()) fail(Errc::PoleAtZero, "denominator vanishes at q = 0");
    return {h.num().at_q0(), std::move(den0)};
}

std::map<std::pair<int, int>, Rational> expand(const BivarRational& h, int bound) {
    Rational d00 = h.den().coeff(0, 0);
    if (is_zero(d00))
        fail(Errc::NonUnitDenominator, "denominator has no constant term; no Taylor expansion");
    std::map<std::pair<int, int>, Rational> out;
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; a + b <= bound; ++b) {
            Rational s = h.num().coeff(a, b);
            for (const auto& [k, v] : h.den().terms()) {
                if (k == std::pair{0, 0} || k.first > a || k.second > b) continue;
                s -= v * out[{a - k.first, b - k.second}];
            }
            out[{a, b}] = s / d00;
        }
    return out;
}

UniRational orlik_terao_series(const std::vector<long long>& w) {
    int top = static_cast<int>(w.size()) - 1;
    UniPoly one_minus_t({Rational(1), Rational(-1)});
    std::vector<UniPoly> pw(top + 1);
    for (int i = 0; i <= top; ++i) pw[i] = i == 0 ? UniPoly::constant(1) : pw[i - 1] * one_minus_t;
    UniPoly num;
    for (int i = 0; i <= top; ++i) num += UniPoly::monomial(Rational(static_cast<long>(w[i])), i) * pw[top - i];
    return {std::move(num), pw[top]};
}

// --- classes ---

CohomClass cohomology_class_from_complex(const SimplicialComplex& c) {
    int top = c.max_facet_size();
    if (top == 0) fail(Errc::EmptyComplex, "complex has no nonempty faces");
    Mask xmask = bit(c.n + 1) - 1;
    CohomClass cls;
    for (Mask f : c.facets) {
        if (popcount(f) != top) continue;
        int x = popcount(f & xmask), y = popcount(f & ~xmask);
        if (x == 0 || y == 0) continue; // spans an empty subvariety
        ++cls.c[{x - 1, y - 1}];
    }
    return cls;
}

namespace {

long long rational_to_integer(const Rational& x, Errc code, const char* what) {
    if (x.get_den() != 1) fail(code, std::string(what) + " is not an integer");
    return mpz_get_si(x.get_num_mpz_t());
}

} // namespace

CohomClass huh_katz_class(const UniPoly& chi_bar, int r) {
    if (chi_bar.degree() != r)
        fail(Errc::DegreeMismatch, "reduced characteristic polynomial degree must be r");
    CohomClass cls;
    for (int i = 0; i <= r; ++i) {
        Rational w = (i % 2 == 0) ? chi_bar.coeff(r - i) : Rational(-chi_bar.coeff(r - i));
        long long wi = rational_to_integer(w, Errc::SignViolation, "Whitney number");
        if (wi < 0) fail(Errc::SignViolation, "extracted Whitney number is negative");
        if (wi > 0) cls.c[{r - i, i}] = wi;
    }
    return cls;
}

KClass k_class_reciprocal_plane(const UniPoly& chi, int r) {
    if (chi.degree() != r + 1)
        fail(Errc::DegreeMismatch, "characteristic polynomial degree must be r+1");
    std::vector<long long> out(r + 1, 0);
    for (int i = 0; i <= r; ++i) {
        Rational w = (i % 2 == 0) ? Rational(-chi.coeff(r - i)) : chi.coeff(r - i);
        long long wi1 = rational_to_integer(w, Errc::SignViolation, "Whitney number"); // w_{i+1}
        long long binom = 1;                                                           // C(i+1, j)
        for (int j = 0; j <= i; ++j) {
            out[i - j] += (j % 2 == 0 ? wi1 : -wi1) * binom;
            binom = binom * (i + 1 - j) / (j + 1);
        }
    }
    return {std::move(out)};
}

std::string CohomClass::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        if (it->second != 1) os << it->second << '*';
        os << "[P^" << it->first.first << " x P^" << it->first.second << ']';
    }
    return os.str();
}

std::string KClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int m = static_cast<int>(coeff.size()) - 1; m >= 0; --m) {
        if (coeff[m] == 0) continue;
        long long a = coeff[m];
        if (first) {
            if (a < 0) os << '-';
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        long long mag = a < 0 ? -a : a;
        if (mag != 1) os << mag << '*';
        os << "[P^" << m << ']';
    }
    return first ? "0" : os.str();
}

} // namespace enbc
