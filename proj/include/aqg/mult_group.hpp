#pragma once

#include <variant>

#include "aqg/group.hpp"

namespace aqg {

/// Finite-support map from group elements to scalars. Zero entries are
/// dropped by the helpers below.
using GroupFun = std::map<GroupElem, Scalar>;

void gf_add(GroupFun& f, const GroupElem& x, const Scalar& c);
GroupFun gf_basis(const GroupElem& x, const Scalar& c = Scalar::one());
GroupFun gf_scale(const GroupFun& f, const Scalar& c);
GroupFun gf_sum(const GroupFun& a, const GroupFun& b);
bool gf_eq(const GroupFun& a, const GroupFun& b);
std::string gf_str(const Group& g, const GroupFun& f);

/// The group algebra C[G] on finite-support elements. For infinite G this is
/// a genuine multiplier Hopf algebra; the coproduct of a finite-support
/// element is itself finite-support, so no covering is needed on this side.
struct LazyGroupAlgebra {
    GroupPtr g;
    GroupFun mul(const GroupFun& a, const GroupFun& b) const;  // convolution
    Scalar eps(const GroupFun& a) const;
    GroupFun S(const GroupFun& a) const;
    /// phi(h) = [h = e]; both a left and a right integral here.
    Scalar integral(const GroupFun& a) const;
};

/// The function algebra F(G) of finite-support functions. The coproduct
/// Delta(f)(p, q) = f(pq) has infinite support for infinite G and exists
/// only through coverings (see CoveredExpr).
struct LazyFunctionAlgebra {
    GroupPtr g;
    GroupFun mul(const GroupFun& a, const GroupFun& b) const;  // pointwise
    Scalar eps(const GroupFun& a) const;                       // f(e)
    GroupFun S(const GroupFun& a) const;                       // f o inv
    /// psi(f) = sum_k f(k); both a left and a right integral.
    Scalar integral(const GroupFun& a) const;
};

/// One tensor leg: which group and whether the leg carries F(G) (pointwise
/// product) or C[G] (convolution).
struct LegAlg {
    GroupPtr g;
    bool is_function = false;
    bool operator==(const LegAlg& o) const {
        return g == o.g && is_function == o.is_function;
    }
};

/// Concrete finite-support element of the tensor product of two legs.
struct GroupTensor {
    LegAlg leg1, leg2;
    std::map<std::pair<GroupElem, GroupElem>, Scalar> ent;

    void add(const GroupElem& u, const GroupElem& v, const Scalar& c);
    bool operator==(const GroupTensor& o) const { return ent == o.ent; }
};

GroupTensor gt_mul(const GroupTensor& a, const GroupTensor& b);
GroupFun gt_apply_leg1(const GroupTensor& t,
                       const std::function<Scalar(const GroupElem&)>& f);
GroupFun gt_apply_leg2(const GroupTensor& t,
                       const std::function<Scalar(const GroupElem&)>& f);

/// Multiplier of a lazy algebra, given by its left and right action on
/// finite-support elements: mul_by_right(b) = m b, mul_by_left(b) = b m.
struct LazyMultiplier {
    std::function<GroupFun(const GroupFun&)> mul_by_right;
    std::function<GroupFun(const GroupFun&)> mul_by_left;

    /// Compatibility (b m) b' = b (m b') on sampled elements, and agreement
    /// with an embedded algebra element when one is supplied.
    Report verify(const LazyFunctionAlgebra& alg, Rng& rng, uint64_t samples,
                  const GroupFun* embedded = nullptr) const;
};

/// The Example 4.1 algebras attached to a (possibly infinite) factorization
/// G = K H: A = C[H] acting on B = F(K) by (f <| h)(k) = f(h |> k), with
/// coaction Gamma(h) = sum_k delta_k (x) (h <| k), evaluated through covers.
struct GroupPairAlgebras {
    Factorization fact;
    LazyGroupAlgebra A;       // C[H]
    LazyFunctionAlgebra B;    // F(K)

    static GroupPairAlgebras make(Factorization f);

    /// b <| a for finite-support b in F(K), a in C[H].
    GroupFun act(const GroupFun& b, const GroupFun& a) const;
    /// (id (x) phi_A) Gamma(a) as a multiplier of B (Proposition 1.4 input).
    LazyMultiplier iota_phi_gamma(const GroupFun& a) const;
};

/// Covered-expression AST: a product of concrete tensors, one-leg covers
/// (c (x) 1) / (1 (x) c), and multiplier-valued cores (a function-algebra
/// coproduct or a pair coaction). eval() multiplies adjacent factors until a
/// single concrete tensor remains; if a multiplier core never meets a
/// covering factor on a leg that makes it finite, it throws
/// UncoveredEvaluation.
class CoveredExpr {
public:
    static CoveredExpr concrete(GroupTensor t);
    static CoveredExpr one_leg(const LegAlg& l1, const LegAlg& l2, const GroupFun& c, int leg);
    static CoveredExpr fun_coproduct(GroupPtr g, GroupFun f);
    static CoveredExpr pair_coaction(std::shared_ptr<const GroupPairAlgebras> pair, GroupFun a);
    static CoveredExpr product(std::vector<CoveredExpr> factors);

    GroupTensor eval() const;

private:
    struct LazyFunCop {
        GroupPtr g;
        GroupFun f;
    };
    struct LazyCoaction {
        std::shared_ptr<const GroupPairAlgebras> pair;
        GroupFun a;
    };
    struct OneLeg {
        LegAlg l1, l2;
        GroupFun c;
        int leg;  // 1 or 2
    };
    using Factor = std::variant<GroupTensor, OneLeg, LazyFunCop, LazyCoaction>;
    std::vector<Factor> factors_;

    static bool combine(Factor& left, Factor& right, Factor& out);
};

/// Finite-group materializations, with the standard star structures
/// (h* = h^{-1} on C[G]; pointwise conjugation on F(G)).
HopfData group_algebra(const Group& g);
HopfData function_algebra(const Group& g);

}  // namespace aqg
