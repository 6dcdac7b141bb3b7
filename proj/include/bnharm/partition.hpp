#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bnharm/rational.hpp"

namespace bnharm {

/// Weakly decreasing sequence of positive integers. Partitions with the
/// same nonzero parts are identified; the empty partition represents 0.
class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws std::invalid_argument if the
    // sequence is not weakly decreasing or has an interior zero/negative.
    explicit Partition(std::vector<int> parts);

    // Comma-separated decreasing integers, "0" for the empty partition.
    static Partition parse(const std::string& s);
    std::string str() const;

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-based; parts beyond the length are 0.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    // Lexicographic on the part vectors; used only as a map key order.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// mu <= lambda in the triangularity order: equal weight and
// lambda_i <= mu_i for all i >= 2.
bool preceq(const Partition& mu, const Partition& lambda);

// Ferrers-diagram containment: nu_i <= lambda_i for all i.
bool contains(const Partition& nu, const Partition& lambda);

// Canonical total order: decreasing length, then lexicographically
// increasing parts. Consistent with preceq.
bool canonical_less(const Partition& a, const Partition& b);

// All partitions of n with at most N parts (first two parts equal when
// tilde_only), in canonical order.
std::vector<Partition> enumerate_partitions(int n, int N, bool tilde_only);

// Number of distinct permutations of lambda padded with zeros to length N.
// Throws std::invalid_argument if l(lambda) > N.
Integer m_at_ones(const Partition& lambda, int N);

// d(n, N) = #{lambda of weight n, length <= N, lambda_1 = lambda_2},
// from the generating product prod_{j=2}^N (1 - q^j)^{-1}.
Integer count_tilde(int n, int N);

// lambda! = prod of factorials of the parts.
Integer partition_factorial(const Partition& lambda);

// (t)_lambda = prod of (t)_{lambda_i}.
Rational pochhammer(const Rational& t, const Partition& lambda);

}  // namespace bnharm
