#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "aqg/error.hpp"

namespace aqg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q or of a cyclotomic field Q(zeta_n), stored as a rational
/// coefficient vector reduced modulo the n-th cyclotomic polynomial.
/// field() == 1 means plain rationals. All arithmetic is exact; mixing two
/// distinct nontrivial cyclotomic orders throws FieldMismatch (rationals
/// promote into any Q(zeta_n)).
class Scalar {
public:
    Scalar() : field_(1), c_(1) {}
    explicit Scalar(const Rational& r) : field_(1), c_{r} {}
    explicit Scalar(long v) : field_(1), c_{Rational(v)} {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar of_int(long v) { return Scalar(v); }
    static Scalar of_rational(const Rational& r) { return Scalar(r); }
    static Scalar of_fraction(long num, long den);
    /// zeta_n, the primitive n-th root of unity generating Q(zeta_n).
    static Scalar zeta(uint32_t n);
    /// zeta_n^k, reduced.
    static Scalar zeta_pow(uint32_t n, long k);
    /// Zero of the field with the given cyclotomic order.
    static Scalar zero_of(uint32_t n);

    uint32_t field() const { return field_; }
    /// Degree of Q(zeta_n) over Q for this element's field.
    size_t degree() const { return c_.size(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const;
    /// The rational value; requires the element to lie in Q.
    Rational rational_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Complex conjugation: zeta_n -> zeta_n^{-1}, identity on Q.
    Scalar conj() const;

    /// Numeric evaluation under zeta_n -> exp(2*pi*i/n). Used only by the
    /// positivity check; everything algebraic stays exact.
    std::complex<double> embed() const;

    std::string str() const;

    /// Construct from explicit data (used by serialization). Coefficients are
    /// in the power basis 1, zeta, ..., zeta^{deg-1} and must have the right
    /// length for the field.
    static Scalar from_coeffs(uint32_t n, std::vector<Rational> coeffs);

    /// Degree of the n-th cyclotomic polynomial (Euler phi of n).
    static size_t phi_degree(uint32_t n);

private:
    uint32_t field_;
    std::vector<Rational> c_;

    void reduce_tail(std::vector<Rational>& raw) const;
    static void align(Scalar& a, Scalar& b);
};

inline Scalar operator*(long v, const Scalar& s) { return Scalar(v) * s; }

}  // namespace aqg
