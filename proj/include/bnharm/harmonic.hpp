#pragma once

#include "bnharm/matrix.hpp"
#include "bnharm/xpoly.hpp"

namespace bnharm {

/// Invariant harmonic basis element h_mu as an m-basis expansion in the
/// argument x^2: coeffs maps lambda to the coefficient of m_lambda(x^2).
struct HarmonicExpansion {
    Partition mu;
    int nvars = 0;
    Rational kappa;
    SymPoly coeffs;
};

/// Sum over layers of e_1(x^2)^j times a symmetric polynomial.
struct RadialLayered {
    std::vector<std::pair<int, SymPoly>> layers;
};

// Coefficient of m_lambda(x^2) m_lambda(y^2) in the invariant kernel of
// degree 2n, for each lambda in P_n^(N).
std::map<Partition, Rational> kernel_KB(int n, int N, const Rational& kappa);

// h_mu: coefficients 2^{-n} B(mu,lambda) / (lambda! (kappa+1/2)_lambda
// m_lambda(1^N)) over lambda with mu preceq lambda.
HarmonicExpansion h_expansion(const Partition& mu, int N,
                              const Rational& kappa);

// Materializes h_mu, applies the Laplacian and compares against
// 2 h_{mu - e_1} (or 0 when mu_1 = mu_2).
bool check_laph(const Partition& mu, int N, const Rational& kappa);

// Biorthogonal partner g_lambda of h_lambda, lambda with equal first two
// parts, as radial layers. Throws std::domain_error when a denominator
// Pochhammer vanishes.
RadialLayered g_expansion(const Partition& lambda, int N,
                          const Rational& kappa);

// Expands the e_1^j layers into a single m-basis polynomial.
SymPoly flatten_radial(const RadialLayered& f, int N);

// Layer decomposition h_mu = sum_j e_1^j h_{mu,j} with harmonic layers.
RadialLayered radial_layers(const Partition& mu, int N, const Rational& kappa);

// <f, g>_h via monomial orthogonality:
// sum_lambda f_lambda g_lambda 2^{2n} lambda! (kappa+1/2)_lambda
// m_lambda(1^N); zero when degrees differ.
Rational pairing_h_fast(const SymPoly& f, const SymPoly& g, int N,
                        const Rational& kappa);

// <g_lambda, h_mu>_h equals delta 2^n / (lambda! (kappa+1/2)_lambda
// m_lambda(1^N)).
bool biorthogonality_check(const Partition& lambda, const Partition& mu,
                           int N, const Rational& kappa);

// Gram matrix of {h} over P~_n^(N) (tilde_only) or P_n^(N).
RatMatrix gram_matrix(int n, int N, const Rational& kappa, bool tilde_only);

// Closed product formula for det of the tilde Gram matrix (simplified
// form); 1 for n <= 1.
Rational gram_det_closed(int n, int N, const Rational& kappa);

// The same determinant through the D_n / D_{n-1} ratio form.
Rational gram_det_unsimplified(int n, int N, const Rational& kappa);

// Sphere inner product of equal-degree harmonics: pairing_h_fast scaled
// by 2^{-2n} / (N/2 + N kappa)_{2n}.
Rational sphere_pairing(const SymPoly& f, const SymPoly& g, int N,
                        const Rational& kappa);

// Casimir eigenvalue -2n(N - 2 + 2n + 2N kappa) on invariant harmonics
// of degree 2n.
Rational casimir_eigenvalue(int n, int N, const Rational& kappa);

}  // namespace bnharm
