#include "aqg/scalar.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace aqg {
namespace {

// Dense polynomial over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Exact division, remainder must vanish.
Poly poly_div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw Error("internal: non-exact cyclotomic division");
    trim(q);
    return q;
}

Poly poly_mod(Poly num, const Poly& den) {
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    return num;
}

struct FieldInfo {
    uint32_t n = 1;
    Poly phi;  // n-th cyclotomic polynomial, monic
    // zeta^k reduced mod phi, for k in [0, 2n); each has length deg(phi).
    std::vector<std::vector<Rational>> zeta_pows;
};

const FieldInfo& field_info(uint32_t n) {
    static std::map<uint32_t, FieldInfo> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // inside the cache (divisors are strictly smaller, so iterate upward).
    std::function<Poly(uint32_t)> phi_of = [&](uint32_t m) -> Poly {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second.phi;
        Poly num(m + 1);
        num[0] = -1;
        num[m] = 1;
        for (uint32_t d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(num, phi_of(d));
        return num;
    };

    FieldInfo info;
    info.n = n;
    info.phi = phi_of(n);
    size_t deg = info.phi.size() - 1;
    info.zeta_pows.resize(2 * n);
    for (uint32_t k = 0; k < 2 * n; ++k) {
        Poly p(k + 1);
        p[k] = 1;
        p = poly_mod(std::move(p), info.phi);
        p.resize(deg);
        info.zeta_pows[k] = std::move(p);
    }
    // Fill the recursion's intermediate fields too so phi_of stays cheap.
    auto [pos, ok] = cache.emplace(n, std::move(info));
    (void)ok;
    return pos->second;
}

}  // namespace

size_t Scalar::phi_degree(uint32_t n) { return field_info(n).phi.size() - 1; }

Scalar Scalar::of_fraction(long num, long den) {
    return Scalar(Rational(Integer(num), Integer(den)));
}

Scalar Scalar::zero_of(uint32_t n) {
    if (n <= 1) return Scalar();
    Scalar s;
    s.field_ = n;
    s.c_.assign(phi_degree(n), Rational(0));
    return s;
}

Scalar Scalar::zeta(uint32_t n) { return zeta_pow(n, 1); }

Scalar Scalar::zeta_pow(uint32_t n, long k) {
    if (n == 0) throw Error("zeta order must be positive");
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    if (n == 1) return Scalar::one();
    if (n == 2) return (r == 0) ? Scalar::one() : Scalar(-1);
    Scalar s = zero_of(n);
    s.c_ = field_info(n).zeta_pows[static_cast<size_t>(r)];
    return s;
}

Scalar Scalar::from_coeffs(uint32_t n, std::vector<Rational> coeffs) {
    if (n <= 1) {
        if (coeffs.size() != 1) throw SchemaError("rational scalar needs one coefficient");
        return Scalar(coeffs[0]);
    }
    if (coeffs.size() != phi_degree(n))
        throw SchemaError("coefficient count does not match deg Phi_n");
    Scalar s;
    s.field_ = n;
    s.c_ = std::move(coeffs);
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& r : c_)
        if (r != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_value() const {
    if (!is_rational()) throw FieldMismatch("scalar is not rational");
    return c_[0];
}

void Scalar::align(Scalar& a, Scalar& b) {
    if (a.field_ == b.field_) return;
    if (a.field_ == 1) {
        Rational v = a.c_[0];
        a = zero_of(b.field_);
        a.c_[0] = v;
        return;
    }
    if (b.field_ == 1) {
        Rational v = b.c_[0];
        b = zero_of(a.field_);
        b.c_[0] = v;
        return;
    }
    throw FieldMismatch("cannot mix Q(zeta_" + std::to_string(a.field_) + ") with Q(zeta_" +
                        std::to_string(b.field_) + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

Scalar Scalar::operator-() const {
    Scalar a = *this;
    for (auto& r : a.c_) r = -r;
    return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
    // Fast path: both rational.
    if (field_ == 1 && o.field_ == 1) return Scalar(c_[0] * o.c_[0]);
    Scalar a = *this, b = o;
    align(a, b);
    const auto& info = field_info(a.field_);
    size_t deg = a.c_.size();
    std::vector<Rational> raw(2 * deg - 1);
    for (size_t i = 0; i < deg; ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (b.c_[j] == 0) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    // Reduce powers >= deg using the cached residues of zeta^k.
    Scalar res = zero_of(a.field_);
    for (size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        if (k < deg) {
            res.c_[k] += raw[k];
        } else {
            const auto& zk = info.zeta_pows[k];
            for (size_t i = 0; i < deg; ++i) res.c_[i] += raw[k] * zk[i];
        }
    }
    return res;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    if (field_ == 1) return Scalar(Rational(1) / c_[0]);
    // Extended Euclid in Q[X] against Phi_n (irreducible over Q).
    const auto& info = field_info(field_);
    Poly r0 = info.phi;
    Poly r1(c_);
    trim(r1);
    Poly s0 = {}, s1 = {Rational(1)};  // coefficients of *this in the combination
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        Poly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
            trim(r2);
        }
        trim(q);
        Poly s2 = s0;
        {
            Poly qs = poly_mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size());
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_n is irreducible and *this != 0).
    if (r0.size() != 1) throw Error("internal: cyclotomic inverse failed");
    Rational g = r0[0];
    Scalar res = zero_of(field_);
    for (size_t i = 0; i < s0.size() && i < res.c_.size(); ++i) res.c_[i] = s0[i] / g;
    if (s0.size() > res.c_.size()) throw Error("internal: inverse degree overflow");
    return res;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ == o.field_) return c_ == o.c_;
    Scalar a = *this, b = o;
    try {
        align(a, b);
    } catch (const FieldMismatch&) {
        return false;
    }
    return a.c_ == b.c_;
}

Scalar Scalar::conj() const {
    if (field_ == 1) return *this;
    const auto& info = field_info(field_);
    Scalar res = zero_of(field_);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        // zeta^k -> zeta^{n-k}
        const auto& z = info.zeta_pows[(field_ - (k % field_)) % field_];
        for (size_t i = 0; i < res.c_.size(); ++i) res.c_[i] += c_[k] * z[i];
    }
    return res;
}

std::complex<double> Scalar::embed() const {
    double ang = 2.0 * std::numbers::pi / static_cast<double>(field_);
    std::complex<double> zeta(std::cos(ang), std::sin(ang));
    std::complex<double> acc(0.0, 0.0), zp(1.0, 0.0);
    for (size_t k = 0; k < c_.size(); ++k) {
        acc += static_cast<double>(c_[k]) * zp;
        zp *= zeta;
    }
    return acc;
}

std::string Scalar::str() const {
    std::ostringstream os;
    if (field_ == 1) {
        os << c_[0];
        return os.str();
    }
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k];
        if (k >= 1) os << "*z" << field_ << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace aqg
