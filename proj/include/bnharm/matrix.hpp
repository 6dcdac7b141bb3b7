#pragma once

#include <functional>

#include "bnharm/sympoly.hpp"

namespace bnharm {

/// Dense matrix of rationals with partition-labeled rows and columns.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::vector<Partition> row_labels,
              std::vector<Partition> col_labels);

    int rows() const { return static_cast<int>(row_labels_.size()); }
    int cols() const { return static_cast<int>(col_labels_.size()); }
    const std::vector<Partition>& row_labels() const { return row_labels_; }
    const std::vector<Partition>& col_labels() const { return col_labels_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;
    // Label lookup; throws std::invalid_argument on unknown label.
    const Rational& at(const Partition& row, const Partition& col) const;
    int row_index(const Partition& label) const;

    RatMatrix multiply(const RatMatrix& other) const;
    RatMatrix inverse() const;        // throws std::domain_error if singular
    Rational determinant() const;     // fraction Gaussian elimination
    bool is_identity() const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::vector<Partition> row_labels_, col_labels_;
    std::vector<std::vector<Rational>> entries_;
};

// Transition matrix A over the canonical labels of P_n^(N):
// A(mu, lambda) = coefficient of m_mu in m~_lambda.
RatMatrix matrix_A(int n, int N);

// B = A^{-1}: m_lambda = sum_mu B(mu, lambda) m~_mu.
RatMatrix matrix_B_by_inversion(int n, int N);

// Cached B(n, N); the matrices are kappa-independent and reused widely.
const RatMatrix& transition_B(int n, int N);

// Closed formula for B(mu, lambda). Throws std::invalid_argument if
// |mu| != |lambda|.
Rational matrix_B_closed(const Partition& mu, const Partition& lambda);

// sum over mu >= lambda of B(lambda, mu)/mu! g(mu padded to N); zero for
// every symmetric g of degree < |lambda| when lambda_1 = lambda_2.
Rational bsym0_check(const Partition& lambda,
                     const std::function<Rational(std::span<const int>)>& g,
                     int N);

}  // namespace bnharm
