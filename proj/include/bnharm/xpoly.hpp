#pragma once

#include <map>
#include <vector>

#include "bnharm/sympoly.hpp"

namespace bnharm {

/// Graded lexicographic order on exponent vectors (total degree first).
struct GradedLexLess {
    bool operator()(const std::vector<int>& a,
                    const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial in x_1..x_N. Exponent vectors have
/// length exactly N; zero coefficients are never stored.
class XPoly {
public:
    explicit XPoly(int nvars);
    static XPoly constant(int nvars, const Rational& c);
    static XPoly monomial(int nvars, std::vector<int> exp,
                          const Rational& coeff = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational, GradedLexLess>& terms() const {
        return terms_;
    }
    Rational coeff(const std::vector<int>& exp) const;
    Rational constant_term() const;
    Rational eval(std::span<const Rational> point) const;

    void add_term(const std::vector<int>& exp, const Rational& coeff);

    XPoly& operator+=(const XPoly& other);
    XPoly& operator-=(const XPoly& other);
    XPoly& operator*=(const Rational& c);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    bool operator==(const XPoly& other) const = default;

private:
    int nvars_;
    std::map<std::vector<int>, Rational, GradedLexLess> terms_;
};

/// Variable count and deformation parameter for the operator algebra.
/// Rejects kappa at a pole -(2j-1)/2 for j up to the working degree.
class OperatorContext {
public:
    OperatorContext(int nvars, Rational kappa, int max_degree = 64);
    int nvars() const { return nvars_; }
    const Rational& kappa() const { return kappa_; }

private:
    int nvars_;
    Rational kappa_;
};

// Differential-difference operator on x_i (i is 1-based):
// x^a -> (a_i + 2 kappa [a_i odd]) x^{a - e_i}, extended linearly.
XPoly dunkl(const OperatorContext& ctx, int i, const XPoly& f);

// Deformed Laplacian: sum of the squares of the dunkl operators.
XPoly laplacian(const OperatorContext& ctx, const XPoly& f);

// Sign change of x_i.
XPoly reflection(int i, const XPoly& f);

// Angular momentum operator x_i D_j - x_j D_i, i != j.
XPoly angular(const OperatorContext& ctx, int i, int j, const XPoly& f);

// Casimir: sum over i < j of the square of the angular operator.
XPoly casimir(const OperatorContext& ctx, const XPoly& f);

// The same operator through the radial identity
// ||x||^2 Lap - E^2 - (N - 2 + 2 kappa sum_i sigma_i) E, E = sum x_i D_i.
XPoly casimir_via_identity(const OperatorContext& ctx, const XPoly& f);

// <f, g>_h = f(D_1,...,D_N) g at x = 0. Definitional, unoptimized.
Rational pairing_h_oracle(const OperatorContext& ctx, const XPoly& f,
                          const XPoly& g);

// Expands sum c_lambda m_lambda(x^2) into an XPoly in N variables.
// Throws std::invalid_argument if a key is longer than N.
XPoly materialize_sym(const SymPoly& f, int N);

// Diagonal eigenvalue of the intertwining operator on x^alpha.
// Throws std::domain_error when kappa sits on a pole.
Rational intertwine_monomial(std::span<const int> alpha,
                             const Rational& kappa);

// Checks Lap^s(||x||^{2j} f) = 2^{2s} (-j)_s (-m-j+1-N/2-N kappa)_s
// ||x||^{2j-2s} f for harmonic f of degree m.
bool laplacian_power_identity_check(const OperatorContext& ctx,
                                    const XPoly& f, int j, int s);

}  // namespace bnharm
