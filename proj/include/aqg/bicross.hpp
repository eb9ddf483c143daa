#pragma once

#include "aqg/modular.hpp"

namespace aqg {

/// Right action of A on B by structure constants: table[b * dimA + a] is
/// e_b <| e_a as a FinVec in B.
struct ActionData {
    std::vector<FinVec> table;
};

/// Left coaction of B on A: gamma[a] lives in B (x) A (row-major legs).
struct CoactionData {
    std::vector<FinVec> gamma;
};

/// A matched pair of the first type: B a right A-module algebra, A a left
/// B-comodule coalgebra, compatible so that the smash coproduct is an
/// algebra map. Verification is operational: verify_matched builds the
/// bicrossproduct and checks every axiom.
struct MatchedPair {
    HopfData A, B;
    ActionData action;
    CoactionData coaction;

    bool has_star() const { return A.star.has_value() && B.star.has_value(); }
    uint32_t field() const { return std::max(A.field, B.field); }

    FinVec act(const FinVec& b, const FinVec& a) const;
    FinVec gamma_of(const FinVec& a) const;
};

/// The bicrossproduct AB assembled on A (x) B with basis (i, j) -> i*dimB+j,
/// in the normal form "a b" with commutation b a = sum a_(1) (b <| a_(2)).
struct Bicross {
    HopfData ab;
    uint64_t dim_a = 0, dim_b = 0;
    FinVec unit_a, unit_b;  // units of the two components

    uint64_t idx(uint64_t i, uint64_t j) const { return i * dim_b + j; }
    /// a -> a # 1_B and b -> 1_A # b.
    FinVec embed_a(const FinVec& a) const { return a.tensor(unit_b); }
    FinVec embed_b(const FinVec& b) const { return unit_a.tensor(b); }
};

LinMap twist_R(const MatchedPair& p);     // B (x) A -> A (x) B,  (3.1)
LinMap twist_Rop(const MatchedPair& p);   // B (x) A -> A (x) B,  (3.2)
LinMap cotwist_T(const MatchedPair& p);   // A (x) B -> B (x) A,  (3.5)
LinMap cotwist_Top(const MatchedPair& p); // A (x) B -> B (x) A,  (3.5)

/// Builds the smash product / coproduct / counit / antipode (and star when
/// both components carry one). Does not verify; see verify_matched.
Bicross build_bicross(const MatchedPair& p);

/// Operational matched-pair verification: module-algebra and
/// comodule-coalgebra laws, the cross relation, P = T o R = T^op o R^op,
/// bijectivity of the twists, the full Hopf axioms of (AB, Delta_#), the
/// antipode extras and the embedding consistency of Delta_#.
Report verify_matched(const MatchedPair& p, const Bicross& bx, const VerifyOptions& opt = {});

/// Second-type data (used for duals): left action of D on C and right
/// coaction Gamma: D -> D (x) C; the smash product CD on C (x) D has
/// commutation d c = sum (d_(1) |> c) d_(2) and coproduct
/// Delta_#(cd) = sum (c_(1) (x) c_(2)) Gamma(d_(1)) (1 (x) d_(2)).
struct MatchedPair2 {
    HopfData C, D;
    /// table[d * dimC + c] = e_d |> e_c in C.
    std::vector<FinVec> action;
    /// gamma[d] in D (x) C.
    std::vector<FinVec> coaction;

    FinVec act(const FinVec& d, const FinVec& c) const;
    FinVec gamma_of(const FinVec& d) const;
};

LinMap twist2_R(const MatchedPair2& p);     // D (x) C -> C (x) D,  (3.3)
LinMap twist2_Rop(const MatchedPair2& p);   // D (x) C -> C (x) D,  (3.4)
LinMap cotwist2_T(const MatchedPair2& p);   // C (x) D -> D (x) C,  (3.6)
LinMap cotwist2_Top(const MatchedPair2& p); // C (x) D -> D (x) C,  (3.6)

/// Assemble CD with an externally supplied antipode (finite-dimensional
/// duality transports it; the Hopf axioms are then re-verified on CD).
Bicross build_bicross2(const MatchedPair2& p, const LinMap& antipode,
                       const std::optional<LinMap>& star = std::nullopt);

/// Second-type verification: module/comodule laws, P = T o R = T^op o R^op
/// together with the two P-compatibility equations, and the Hopf axioms of CD.
Report verify_matched2(const MatchedPair2& p, const Bicross& cd,
                       const VerifyOptions& opt = {});

}  // namespace aqg
