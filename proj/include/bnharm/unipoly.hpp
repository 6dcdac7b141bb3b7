#pragma once

#include <utility>
#include <vector>

#include "bnharm/rational.hpp"

namespace bnharm {

/// Univariate polynomial over the rationals, coefficient index = power.
/// The zero polynomial has degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly& other) const = default;

    // Unique polynomial of degree < points.size() through the given
    // (x, y) pairs; x values must be distinct.
    static UniPoly interpolate(
        std::span<const std::pair<Rational, Rational>> points);

    // Drops terms of degree > d.
    UniPoly truncated(int d) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// p_0, ..., p_jmax with p_0 = 1, p_j(0) = 0 for j >= 1, deg p_j = 2j,
// satisfying p_j(n+1) - p_j(n) = (n + 1/2) p_{j-1}(n+1).
std::vector<UniPoly> p_polys(unsigned j_max);

}  // namespace bnharm
