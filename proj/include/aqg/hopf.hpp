#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqg/linmap.hpp"
#include "aqg/report.hpp"

namespace aqg {

/// Finite-dimensional Hopf(-*) algebra given by structure constants.
///
/// Conventions:
///  - mult[i * dim + j] is the product e_i * e_j as a FinVec in dim.
///  - comult[i] lives in the tensor square (dim^2, row-major legs).
///  - antipode is a column map; star, when present, is the matrix of the
///    antilinear involution: star(x) = star_matrix * conj(coords of x).
///  - field is the cyclotomic order of the scalar field (1 for Q).
struct HopfData {
    std::vector<std::string> basis;
    uint64_t dim = 0;
    std::vector<FinVec> mult;
    FinVec unit;
    std::vector<FinVec> comult;
    std::vector<Scalar> counit;
    LinMap antipode;
    std::optional<LinMap> star;
    uint32_t field = 1;

    std::string label(uint64_t i) const { return basis[i]; }

    FinVec zero() const { return FinVec(dim); }
    FinVec e(uint64_t i) const { return FinVec::basis(dim, i); }

    FinVec mul(const FinVec& x, const FinVec& y) const;
    FinVec mul(const FinVec& x, const FinVec& y, const FinVec& z) const {
        return mul(mul(x, y), z);
    }
    FinVec delta(const FinVec& x) const;
    Scalar eps(const FinVec& x) const;
    FinVec S(const FinVec& x) const { return antipode.apply(x); }
    FinVec star_of(const FinVec& x) const;

    /// Product in the tensor square (componentwise with the leg convention).
    FinVec mul2(const FinVec& x, const FinVec& y) const;
    /// Coproduct applied legwise: (delta (x) id) etc. use apply_on_legs.
    FinVec pow(const FinVec& x, uint64_t k) const;

    bool is_grouplike(const FinVec& x) const;
    /// Solves x * y = 1 = y * x; empty if not invertible.
    std::optional<FinVec> inverse_of(const FinVec& x) const;
};

/// Controls how exhaustively quadratic/cubic basis checks run. Checks whose
/// estimated scalar-operation count exceeds `op_budget` fall back to a
/// seed-fixed random sample of the index space; every Report entry records
/// which mode was used.
struct VerifyOptions {
    uint64_t op_budget = 50'000'000;
    uint64_t samples = 2000;
    uint64_t seed = 0xB1C8;
};

/// Every Hopf axiom from the data sheet, with witnesses on failure:
/// associativity, unit, coassociativity, counit, Delta/eps homomorphisms,
/// antipode axiom both sides, bijectivity of S, star axioms when present.
Report verify_hopf(const HopfData& h, const VerifyOptions& opt = {});

/// Budgeted iteration helpers shared by the verification suites. The body
/// returns false to stop early (after recording a witness).
std::string for_pairs(uint64_t n, uint64_t cost_per, const VerifyOptions& opt,
                      const std::function<bool(uint64_t, uint64_t)>& body);
std::string for_triples(uint64_t n, uint64_t cost_per, const VerifyOptions& opt,
                        const std::function<bool(uint64_t, uint64_t, uint64_t)>& body);

HopfData opposite(const HopfData& h);
HopfData coopposite(const HopfData& h);
HopfData tensor_hopf(const HopfData& a, const HopfData& b);

}  // namespace aqg
