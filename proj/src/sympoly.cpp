#include "bnharm/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnharm {

SymPoly SymPoly::monomial(const Partition& lambda, const Rational& coeff) {
    SymPoly f(lambda.weight());
    f.add(lambda, coeff);
    return f;
}

Rational SymPoly::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add(const Partition& lambda, const Rational& coeff) {
    if (lambda.weight() != degree_)
        throw std::invalid_argument("SymPoly::add: weight mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) degree_ = other.degree_;
    for (const auto& [lambda, c] : other.terms_) add(lambda, c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff *= c;
    return *this;
}

bool SymPoly::operator==(const SymPoly& other) const {
    if (is_zero() && other.is_zero()) return true;
    return degree_ == other.degree_ && terms_ == other.terms_;
}

Integer e1_coeff(const Partition& lambda, const Partition& nu) {
    int j = lambda.weight() - nu.weight();
    if (j < 0) throw std::invalid_argument("e1_coeff: |lambda| < |nu|");
    int len = lambda.length();
    if (nu.length() > len) return 0;
    if (len == 0) return 1;  // lambda = nu = ()
    // Distinct permutations of nu padded with zeros to l(lambda).
    std::vector<int> sigma(static_cast<size_t>(len), 0);
    std::copy(nu.parts().begin(), nu.parts().end(), sigma.begin());
    std::sort(sigma.begin(), sigma.end());
    Integer total = 0;
    std::vector<long> diff(static_cast<size_t>(len));
    do {
        bool ok = true;
        for (size_t i = 0; i < sigma.size(); ++i) {
            diff[i] = lambda.parts()[i] - sigma[i];
            if (diff[i] < 0) {
                ok = false;
                break;
            }
        }
        if (ok) total += multinomial(static_cast<unsigned long>(j), diff);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

SymPoly e1_pow_mul(int j, const SymPoly& f, int N) {
    if (j < 0) throw std::invalid_argument("e1_pow_mul: negative power");
    if (j == 0 || f.is_zero()) return f;
    SymPoly result(f.degree() + j);
    auto targets = enumerate_partitions(f.degree() + j, N, false);
    for (const auto& [nu, c] : f.terms())
        for (const auto& lambda : targets) {
            Integer coeff = e1_coeff(lambda, nu);
            if (coeff != 0) result.add(lambda, Rational(coeff) * c);
        }
    return result;
}

SymPoly mtilde(const Partition& lambda, int N) {
    if (lambda.length() > N)
        throw std::invalid_argument("mtilde: partition longer than N");
    std::vector<int> base = lambda.parts();
    if (!base.empty()) base[0] = lambda.part(2);
    return e1_pow_mul(lambda.part(1) - lambda.part(2),
                      SymPoly::monomial(Partition(std::move(base))), N);
}

Rational gen_binomial(const Partition& lambda, const Partition& nu) {
    int j = lambda.weight() - nu.weight();
    if (j < 0) throw std::invalid_argument("gen_binomial: |lambda| < |nu|");
    Rational scale(partition_factorial(lambda),
                   partition_factorial(nu) *
                       factorial(static_cast<unsigned long>(j)));
    scale.canonicalize();
    return scale * Rational(e1_coeff(lambda, nu));
}

}  // namespace bnharm
