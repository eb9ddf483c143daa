#pragma once

#include "aqg/bicross.hpp"
#include "aqg/mult_group.hpp"

namespace aqg {

/// Taft algebra T_n at the primitive root zeta_n: generators g (order n) and
/// x with x^n = 0, x g = zeta g x, Delta(g) = g (x) g,
/// Delta(x) = 1 (x) x + x (x) g. Basis g^i x^j at index i*n + j. Carries the
/// star structure g* = g, x* = x. n = 2 is the Sweedler algebra (over Q).
HopfData taft_algebra(uint32_t n);
HopfData sweedler_algebra();

/// The matched pair of Example 4.1 attached to a finite factorization
/// G = K H: A = C[H], B = F(K), (f <| h)(k) = f(h |> k),
/// Gamma(h) = sum_k delta_k (x) (h <| k).
MatchedPair group_matched_pair(const Factorization& f);

/// The mirror pair on a Hopf algebra A: B = A^cop, adjoint action
/// b <| a = sum S(a_(1)) b a_(2), adjoint coaction
/// Gamma(a) = sum S(a_(1)) a_(3) (x) a_(2).
MatchedPair mirror_pair(const HopfData& a);

/// theta(a (x) b) = sum a_(1) # S(a_(2)) b, as a map A (x) B -> AB.
LinMap theta_iso(const MatchedPair& mirror, const Bicross& bx);
/// eta(c (x) d) = sum c d_(1) # d_(2) on the mirror-dual side, where
/// (D, Delta_D) = (C^op, Delta_C) and products are taken in C.
LinMap eta_iso(const MatchedPair2& mirror_dual, const Bicross& cd);

/// The closed antipode formula of the mirror case:
/// S_#(a # b) = sum S(a_(2)) # S^2(a_(1)) S^{-1}(b) S^{-1}(a_(3)), plus the
/// transport identity S_# o theta = theta o (S (x) S^{-1}).
Report s_sharp_mirror_check(const MatchedPair& mirror, const Bicross& bx);

/// Trivial-action pair with B = B0 (x) B1 (B1 commutative) and coaction
/// 1 (x) Gamma1 where Gamma1: A -> B1 (x) A makes A a left B1-comodule
/// bi-algebra.
MatchedPair trivial_action_pair(const HopfData& a, const HopfData& b0, const HopfData& b1,
                                const std::vector<FinVec>& gamma1);

/// The automorphism coaction of Proposition 4.10: alphas[p] is the Hopf
/// automorphism attached to group element index p of the finite group g;
/// Gamma1(a) = sum_p delta_p (x) alpha_{p^{-1}}(a) into F(g) (x) A.
std::vector<FinVec> automorphism_coaction(const HopfData& a, const Group& g,
                                          const std::vector<LinMap>& alphas);

/// Relative invariance of Proposition 4.11: solves phi(alpha_p(a)) =
/// nu(p) phi(a) and returns nu as a vector over the group's element indices.
std::vector<Scalar> relative_invariance(const HopfData& a, const ModularData& mdA,
                                        const Group& g, const std::vector<LinMap>& alphas);

/// Proposition 4.13, forward direction: with a trivial coaction the pair is
/// matched iff B is a right A-module bi-algebra and R = R^op. The report
/// carries both conditions plus the full matched verification of the pair.
Report trivial_coaction_check(const HopfData& a, const HopfData& b, const ActionData& action,
                              const VerifyOptions& opt = {});

/// Definition 4.14 / Proposition 4.15: the left leg of Gamma(A) lies in the
/// fixed-point algebra of the action whenever Gamma is multiplicative; the
/// fixed elements found are closed under products.
Report fixed_point_check(const MatchedPair& p);

/// The nilpotent matched pair of groups over Z_p (Prop 4.16 / Ex 4.17):
/// H = K = unitriangular 3x3 over Z_p with
/// h |> k = (k_x, k_y, k_z - h_b k_y),  h <| k = (h_a, h_b, h_c - k_x h_a).
Factorization nilpotent_matched_pair(int64_t p);

/// The Prop 4.16 maps theta(h) = gamma(h)^{-1} and theta'(k) = gamma'(k)^{-1}
/// (gamma = transpose anti-isomorphism), in the coordinates above.
GroupElem nilpotent_theta(int64_t p, const GroupElem& h);
GroupElem nilpotent_theta_prime(int64_t p, const GroupElem& k);

/// Standard factorizations used by the gallery.
Factorization s3_factorization();
Factorization z6_factorization();
/// Infinite dihedral group Z >< Z_2: K = Z, H = Z_2 flipping the sign.
Factorization dinfty_factorization();

/// Named gallery registry. The canonical six instances are
/// group-s3, group-z6, heisenberg-p3, mirror-sweedler, mirror-taft3,
/// trivial-action-aut; extras: mirror-z2, mirror-z3, mirror-z4, mirror-s3,
/// mirror-taft4.
MatchedPair gallery_pair(const std::string& name);
std::vector<std::string> gallery_names();          // canonical six
std::vector<std::string> gallery_names_all();

}  // namespace aqg
