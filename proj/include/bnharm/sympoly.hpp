#pragma once

#include <map>

#include "bnharm/partition.hpp"

namespace bnharm {

/// Homogeneous symmetric polynomial in the monomial basis: a sparse map
/// partition -> coefficient, every key of weight = degree. Zero
/// coefficients are never stored.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(int degree) : degree_(degree) {}
    static SymPoly monomial(const Partition& lambda,
                            const Rational& coeff = 1);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& lambda) const;

    // Throws std::invalid_argument if |lambda| != degree.
    void add(const Partition& lambda, const Rational& coeff);

    SymPoly& operator+=(const SymPoly& other);
    SymPoly& operator*=(const Rational& c);
    friend SymPoly operator*(SymPoly f, const Rational& c) { return f *= c; }
    bool operator==(const SymPoly& other) const;

private:
    int degree_ = 0;
    std::map<Partition, Rational> terms_;
};

// <lambda|nu>: coefficient of m_lambda in e_1^j m_nu, j = |lambda| - |nu|,
// as a sum of multinomials over the distinct permutations of nu.
// Throws std::invalid_argument if |lambda| < |nu|.
Integer e1_coeff(const Partition& lambda, const Partition& nu);

// e_1^j f expanded in the m-basis, truncating partitions longer than N.
SymPoly e1_pow_mul(int j, const SymPoly& f, int N);

// Modified monomial basis element m~_lambda = e_1^{l1-l2} m_{(l2,l2,l3,...)}
// in the m-basis. Throws std::invalid_argument if l(lambda) > N.
SymPoly mtilde(const Partition& lambda, int N);

// Generalized binomial coefficient lambda! / (nu! (|lambda|-|nu|)!) <lambda|nu>.
Rational gen_binomial(const Partition& lambda, const Partition& nu);

}  // namespace bnharm
