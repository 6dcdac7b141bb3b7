#pragma once

#include "bnharm/matrix.hpp"
#include "bnharm/unipoly.hpp"

namespace bnharm {

struct EvalReport {
    Partition lambda;
    Rational kappa;
    Rational direct;
    Rational residue;
    bool match = false;
};

struct DegreeReport {
    int degree = 0;
    int bound = 0;
    bool ok = false;
    UniPoly q;
};

// h_lambda at (1, 0, ..., 0): 2^{-n} B(lambda,(n)) / (n! (kappa+1/2)_n N)
// with B(lambda,(n)) = (-1)^{n-l1} n (n-l2-1)! / prod_{i>=2} l_i!. The
// closed B value needs lambda_1 = lambda_2; throws otherwise, or when
// n < 2 or l(lambda) > N.
Rational h_at_first_unit(const Partition& lambda, int N,
                         const Rational& kappa);

// h_lambda(1^N) = 2^{-n} sum_{lambda preceq mu} B(lambda,mu)/(mu!
// (kappa+1/2)_mu); N-independent, computed with N = l(lambda).
Rational h_at_ones_direct(const Partition& lambda, const Rational& kappa);

// Same sum with an explicit padding N >= l(lambda) (cross-check of the
// N-independence).
Rational h_at_ones_direct_padded(const Partition& lambda, int N,
                                 const Rational& kappa);

// The residue transformation of h_lambda(1^N): only terms with
// mu_1 >= k(lambda) = lambda_1 + floor((n+1)/2) contribute.
Rational h_at_ones_residue(const Partition& lambda, const Rational& kappa);

EvalReport eval_ones(const Partition& lambda, const Rational& kappa);

// Interpolates q_lambda from h_lambda(1^N) (kappa+1/2)_n prod_{i>=2}
// (kappa+1/2)_{lambda_i} at integer kappa nodes; checks
// deg q <= floor(n/2) - lambda_1.
DegreeReport q_degree_check(const Partition& lambda);

// Laurent coefficients of h_lambda(1^N) = sum_{j>=n} a_j kappa^{-j}:
// a_{n+s} for s = 0..s_max via the p-polynomial expansion of
// 1/(kappa+1/2)_mu.
std::vector<Rational> laurent_coeffs(const Partition& lambda, int s_max);

// Checks a_j = 0 exactly for n <= j < floor((3n+1)/2) through both the
// p-polynomial route and the q_lambda interpolation route (vanishing
// order 2n - lambda_1 - deg q), and that the two routes agree up to
// order n + j_max.
bool laurent_vanishing_check(const Partition& lambda, int j_max);

}  // namespace bnharm
