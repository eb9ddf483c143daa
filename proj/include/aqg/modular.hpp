#pragma once

#include "aqg/hopf.hpp"
#include "aqg/solve.hpp"

namespace aqg {

/// Integrals and modular data of a finite-dimensional Hopf algebra, all
/// produced by exact linear solving. psi is the right integral normalized so
/// that its first nonzero coordinate in basis order is 1; phi = psi o S.
struct ModularData {
    FinVec psi;      // right integral, as a functional (coefficient vector)
    FinVec phi;      // left integral = psi o S
    FinVec delta;    // modular element: (phi (x) id) Delta(a) = phi(a) delta
    FinVec delta_inv;
    LinMap sigma;        // phi(a b) = phi(b sigma(a))
    LinMap sigma_prime;  // psi(a b) = psi(b sigma'(a))
    Scalar tau;          // psi(S^2(x)) = tau psi(x)
    FinVec coint_left;   // h with b h = eps(b) h
    FinVec coint_right;  // k with k b = eps(b) k
};

struct NoIntegralError : InvalidInput {
    explicit NoIntegralError(const std::string& m) : InvalidInput("no integral: " + m) {}
};
struct NonUniqueIntegralError : InvalidInput {
    explicit NonUniqueIntegralError(const std::string& m)
        : InvalidInput("integral space not one-dimensional: " + m) {}
};

/// Functional x -> f(x) composed with a linear map on the algebra.
FinVec functional_compose(const FinVec& f, const LinMap& m);

/// Solve the right-invariance system and derive the full modular data.
/// Requires verify_hopf(h) to pass (not rechecked here).
ModularData find_integrals(const HopfData& h);

/// Left and right cointegrals, normalized first-nonzero-coordinate = 1.
std::pair<FinVec, FinVec> find_cointegrals(const HopfData& h);

/// Every ModularData invariant, checked exactly; includes the relation
/// sigma'(delta) = tau^{-1} delta and, for star algebras, the proportionality
/// of conj o psi o star to psi.
Report verify_modular(const HopfData& h, const ModularData& md,
                      const VerifyOptions& opt = {});

/// Gram-matrix positivity of psi under the complex embedding: the single
/// tolerance-based check in the library (eigenvalues >= -1e-9). Requires a
/// star structure.
Report check_positivity(const HopfData& h, const FinVec& psi);

/// The pairing matrix P[i][j] = f(e_i e_j); throws DegenerateForm if
/// singular when `require_nondegenerate`.
LinMap pairing_matrix(const HopfData& h, const FinVec& f, bool require_nondegenerate);

}  // namespace aqg
