#pragma once

// Exact Laurent polynomials in the parameters q, Q_0..Q_3, eta_1..eta_3 and one
// auxiliary variable x, with arbitrary-precision integer coefficients.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prime_field.hpp"

namespace akschur {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kNumVars = 9;
inline constexpr int kMaxQ = 4;
inline constexpr int kMaxEta = 3;

inline constexpr int var_q() { return 0; }
inline constexpr int var_Q(int k) { return 1 + k; }
inline constexpr int var_eta(int i) { return 4 + i; }  // i = 1..3
inline constexpr int var_x() { return 8; }

inline std::string var_name(int v) {
    if (v == 0) return "q";
    if (v >= 1 && v <= 4) return "Q" + std::to_string(v - 1);
    if (v >= 5 && v <= 7) return "eta" + std::to_string(v - 4);
    return "x";
}

using Exponents = std::array<std::int16_t, kNumVars>;

inline Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents c{};
    for (int i = 0; i < kNumVars; ++i) c[i] = static_cast<std::int16_t>(a[i] + b[i]);
    return c;
}

inline Exponents operator-(const Exponents& a, const Exponents& b) {
    Exponents c{};
    for (int i = 0; i < kNumVars; ++i) c[i] = static_cast<std::int16_t>(a[i] - b[i]);
    return c;
}

// A random assignment of every variable to a nonzero residue mod p.
struct SpecializationPoint {
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, kNumVars> value{};
    std::array<std::uint64_t, kNumVars> inverse{};

    static SpecializationPoint draw(std::uint64_t p, std::uint64_t seed) {
        SpecializationPoint pt;
        pt.p = p;
        pt.seed = seed;
        std::mt19937_64 rng(seed);
        for (int v = 0; v < kNumVars; ++v) {
            std::uint64_t x = 0;
            while (x == 0) x = rng() % p;
            pt.value[v] = x;
            pt.inverse[v] = modinv(x, p);
        }
        return pt;
    }

    // Same residues as *this except the chosen variable, which is pinned.
    SpecializationPoint with(int var, std::uint64_t x) const {
        SpecializationPoint pt = *this;
        x %= p;
        if (x == 0) throw std::invalid_argument("specialization values must be nonzero");
        pt.value[var] = x;
        pt.inverse[var] = modinv(x, p);
        return pt;
    }

    Fp operator[](int v) const { return Fp{value[v], p}; }
};

// Three points drawn from consecutive seeds; generic ranks need agreement at all of them.
inline std::vector<SpecializationPoint> specialization_points(std::uint64_t p, std::uint64_t seed,
                                                              int count = 3) {
    std::vector<SpecializationPoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(SpecializationPoint::draw(p, seed * 1000003ULL + 7919ULL * (i + 1)));
    return pts;
}

class ParamPoly {
public:
    using Term = std::pair<Exponents, Integer>;

    ParamPoly() = default;
    ParamPoly(long c) {  // NOLINT: integers promote implicitly
        if (c != 0) terms_.push_back({Exponents{}, Integer(c)});
    }

    static ParamPoly constant(const Integer& c) {
        ParamPoly r;
        if (c != 0) r.terms_.push_back({Exponents{}, c});
        return r;
    }

    static ParamPoly monomial(const Exponents& e, const Integer& c = 1) {
        ParamPoly r;
        if (c != 0) r.terms_.push_back({e, c});
        return r;
    }

    static ParamPoly var(int v, int power = 1) {
        Exponents e{};
        e[v] = static_cast<std::int16_t>(power);
        return monomial(e);
    }

    static ParamPoly from_terms(std::vector<Term> t) {
        ParamPoly r;
        r.terms_ = std::move(t);
        r.normalize();
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponents{});
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, false); }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return merge(a, b, true); }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1 && b.terms_.size() == 1) {
            return monomial(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
        }
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) out.push_back({ta.first + tb.first, ta.second * tb.second});
        return from_terms(std::move(out));
    }

    ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
    ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
    ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

    // Nonnegative powers of anything; negative powers only of monomials with unit coefficient.
    ParamPoly pow(int e) const {
        if (e < 0) {
            if (!is_monomial() || abs(terms_[0].second) != 1)
                throw std::domain_error("ParamPoly::pow: negative power of a non-unit");
            Exponents ex{};
            for (int i = 0; i < kNumVars; ++i) ex[i] = static_cast<std::int16_t>(terms_[0].first[i] * e);
            Integer c = (terms_[0].second < 0 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
            return monomial(ex, c);
        }
        ParamPoly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Inverse of a monomial with coefficient +-1.
    ParamPoly unit_inverse() const { return pow(-1); }

    // Exact quotient a / d if d divides a in the Laurent ring, else nullopt.
    // Leading terms are taken in lexicographic order; every quotient term must lie in the
    // exponent box [lo(a) - lo(d), hi(a) - hi(d)], which bounds the loop.
    std::optional<ParamPoly> divide_exact(const ParamPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return ParamPoly{};
        Exponents box_lo{}, box_hi{};
        for (int v = 0; v < kNumVars; ++v) {
            auto [alo, ahi] = degree_range(v);
            auto [dlo, dhi] = d.degree_range(v);
            box_lo[v] = static_cast<std::int16_t>(alo - dlo);
            box_hi[v] = static_cast<std::int16_t>(ahi - dhi);
        }
        ParamPoly rem = *this, quo;
        const Term& lead_d = d.terms_.back();
        while (!rem.is_zero()) {
            const Term& lead_r = rem.terms_.back();
            if (lead_r.second % lead_d.second != 0) return std::nullopt;
            Exponents e = lead_r.first - lead_d.first;
            for (int v = 0; v < kNumVars; ++v)
                if (e[v] < box_lo[v] || e[v] > box_hi[v]) return std::nullopt;
            ParamPoly t = monomial(e, lead_r.second / lead_d.second);
            quo += t;
            rem -= t * d;
        }
        return quo;
    }

    Fp specialize(const SpecializationPoint& pt) const {
        Fp acc{0, pt.p};
        for (const auto& [e, c] : terms_) {
            Fp term = Fp::from_integer(c, pt.p);
            for (int v = 0; v < kNumVars; ++v) {
                if (e[v] > 0) term = term * Fp{powmod(pt.value[v], static_cast<std::uint64_t>(e[v]), pt.p), pt.p};
                else if (e[v] < 0)
                    term = term * Fp{powmod(pt.inverse[v], static_cast<std::uint64_t>(-e[v]), pt.p), pt.p};
            }
            acc = acc + term;
        }
        return acc;
    }

    // Replaces variable v by the given value everywhere (v's exponent may be negative only if
    // value is a unit monomial).
    ParamPoly substitute(int v, const ParamPoly& value) const {
        ParamPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            rest[v] = 0;
            out += monomial(rest, c) * value.pow(e[v]);
        }
        return out;
    }

    // Degree bounds in a single variable; {0,0} for zero.
    std::pair<int, int> degree_range(int v) const {
        if (terms_.empty()) return {0, 0};
        int lo = terms_[0].first[v], hi = lo;
        for (const auto& t : terms_) {
            lo = std::min<int>(lo, t.first[v]);
            hi = std::max<int>(hi, t.first[v]);
        }
        return {lo, hi};
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Integer mag = abs(c);
            bool has_var = e != Exponents{};
            if (c < 0) os << (first ? "-" : " - ");
            else if (!first) os << " + ";
            first = false;
            if (!has_var || mag != 1) {
                os << mag;
                if (has_var) os << "*";
            }
            bool first_var = true;
            for (int v = 0; v < kNumVars; ++v) {
                if (e[v] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << var_name(v);
                if (e[v] != 1) os << "^" << (e[v] < 0 ? "(" : "") << e[v] << (e[v] < 0 ? ")" : "");
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;  // sorted by exponent vector, no zero coefficients

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::size_t w = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            Exponents e = terms_[i].first;
            Integer c = 0;
            while (i < terms_.size() && terms_[i].first == e) c += terms_[i++].second;
            if (c != 0) terms_[w++] = {e, std::move(c)};
        }
        terms_.resize(w);
    }

    static ParamPoly merge(const ParamPoly& a, const ParamPoly& b, bool subtract) {
        ParamPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.push_back({b.terms_[j].first, subtract ? Integer(-b.terms_[j].second) : b.terms_[j].second});
                ++j;
            } else {
                Integer c = a.terms_[i].second;
                if (subtract) c -= b.terms_[j].second;
                else c += b.terms_[j].second;
                if (c != 0) r.terms_.push_back({a.terms_[i].first, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

inline ParamPoly Qvar(int k) { return ParamPoly::var(var_Q(k)); }
inline ParamPoly qvar() { return ParamPoly::var(var_q()); }
inline ParamPoly qpow(int e) { return ParamPoly::var(var_q(), e); }
inline ParamPoly eta(int i) { return ParamPoly::var(var_eta(i)); }

// q - q^{-1}
inline ParamPoly qdelta() { return qpow(1) - qpow(-1); }

// Quantum integer [k] = (q^k - q^{-k}) / (q - q^{-1}) as a Laurent polynomial.
inline ParamPoly qint(int k) {
    ParamPoly r;
    int sgn = k < 0 ? -1 : 1;
    int a = k < 0 ? -k : k;
    for (int j = 0; j < a; ++j) r += qpow(a - 1 - 2 * j);
    return sgn < 0 ? -r : r;
}

inline ParamPoly scalar_from_int(const ParamPoly&, long c) { return ParamPoly(c); }
inline Fp scalar_from_int(const Fp& one, long c) { return Fp::from_int(c, one.p); }

inline Fp specialize(const ParamPoly& a, const SpecializationPoint& pt) { return a.specialize(pt); }

}  // namespace akschur
