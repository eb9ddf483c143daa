#pragma once

#include <cstdint>
#include <random>

#include "aqg/scalar.hpp"

namespace aqg {

/// Deterministic seeded generator. std::mt19937_64's output sequence is
/// pinned by the standard, and we avoid std distributions (whose streams are
/// implementation-defined) so runs are byte-reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed = 0xB1C8) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection sampling to stay unbiased.
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    long range(long lo, long hi) {  // inclusive ends
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Small random rational with numerator in [-9, 9], denominator in [1, 9].
    Scalar small_rational() {
        return Scalar::of_fraction(range(-9, 9), range(1, 9));
    }

    /// Random element of Q(zeta_n) with small rational coefficients.
    Scalar small_scalar(uint32_t field) {
        if (field <= 1) return small_rational();
        Scalar acc = Scalar::zero_of(field);
        size_t deg = Scalar::phi_degree(field);
        for (size_t k = 0; k < deg; ++k)
            acc += Scalar::zeta_pow(field, static_cast<long>(k)) * small_rational();
        return acc;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace aqg
