#include "bnharm/unipoly.hpp"

#include <stdexcept>

namespace bnharm {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1,
                               Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(prod));
}

UniPoly UniPoly::interpolate(
    std::span<const std::pair<Rational, Rational>> points) {
    // Newton's divided differences.
    const size_t m = points.size();
    if (m == 0) return {};
    std::vector<Rational> divided;
    divided.reserve(m);
    for (const auto& [x, y] : points) {
        (void)x;
        divided.push_back(y);
    }
    for (size_t level = 1; level < m; ++level)
        for (size_t i = m - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx == 0)
                throw std::invalid_argument("interpolate: repeated node");
            divided[i] = (divided[i] - divided[i - 1]) / dx;
        }
    UniPoly result;
    for (size_t i = m; i-- > 0;) {
        // result = result * (x - x_i) + divided[i]
        UniPoly shift(std::vector<Rational>{-points[i].first, Rational(1)});
        result = result * shift + UniPoly::constant(divided[i]);
    }
    return result;
}

UniPoly UniPoly::truncated(int d) const {
    if (d < 0) return {};
    if (degree() <= d) return *this;
    return UniPoly(std::vector<Rational>(coeffs_.begin(),
                                         coeffs_.begin() + d + 1));
}

std::vector<UniPoly> p_polys(unsigned j_max) {
    std::vector<UniPoly> p;
    p.reserve(j_max + 1);
    p.push_back(UniPoly::constant(1));
    for (unsigned j = 1; j <= j_max; ++j) {
        // Accumulate values at n = 0..2j from the first-difference
        // recurrence, then interpolate (degree 2j needs 2j+1 nodes).
        std::vector<std::pair<Rational, Rational>> nodes;
        nodes.reserve(2 * j + 1);
        Rational value = 0;
        nodes.emplace_back(Rational(0), value);
        for (unsigned n = 0; n < 2 * j; ++n) {
            value += (Rational(n) + Rational(1, 2)) * p[j - 1](Rational(n + 1));
            nodes.emplace_back(Rational(n + 1), value);
        }
        p.push_back(UniPoly::interpolate(nodes));
    }
    return p;
}

}  // namespace bnharm
