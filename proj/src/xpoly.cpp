#include "bnharm/xpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bnharm {

bool GradedLexLess::operator()(const std::vector<int>& a,
                               const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

XPoly::XPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("XPoly: nvars must be positive");
}

XPoly XPoly::constant(int nvars, const Rational& c) {
    XPoly f(nvars);
    f.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return f;
}

XPoly XPoly::monomial(int nvars, std::vector<int> exp, const Rational& coeff) {
    XPoly f(nvars);
    f.add_term(exp, coeff);
    return f;
}

Rational XPoly::coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational XPoly::constant_term() const {
    return coeff(std::vector<int>(static_cast<size_t>(nvars_), 0));
}

Rational XPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("XPoly::eval: wrong point dimension");
    Rational total = 0;
    for (const auto& [exp, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < exp[static_cast<size_t>(i)]; ++k)
                term *= point[static_cast<size_t>(i)];
        total += term;
    }
    return total;
}

void XPoly::add_term(const std::vector<int>& exp, const Rational& coeff) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("XPoly::add_term: wrong exponent length");
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("XPoly::add_term: negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

XPoly& XPoly::operator+=(const XPoly& other) {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("XPoly: variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("XPoly: variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, Rational(-c));
    return *this;
}

XPoly& XPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exp, coeff] : terms_) coeff *= c;
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("XPoly: variable count mismatch");
    XPoly prod(a.nvars_);
    std::vector<int> exp(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < exp.size(); ++i) exp[i] = ea[i] + eb[i];
            prod.add_term(exp, ca * cb);
        }
    return prod;
}

OperatorContext::OperatorContext(int nvars, Rational kappa, int max_degree)
    : nvars_(nvars), kappa_(std::move(kappa)) {
    if (nvars < 1)
        throw std::invalid_argument("OperatorContext: nvars must be positive");
    if (pochhammer(kappa_ + Rational(1, 2),
                   static_cast<unsigned long>(max_degree)) == 0)
        throw std::domain_error(
            "OperatorContext: kappa is a pole (negative half-integer)");
}

XPoly dunkl(const OperatorContext& ctx, int i, const XPoly& f) {
    if (i < 1 || i > ctx.nvars())
        throw std::invalid_argument("dunkl: index out of range");
    XPoly result(ctx.nvars());
    const size_t idx = static_cast<size_t>(i - 1);
    for (const auto& [exp, c] : f.terms()) {
        int a = exp[idx];
        if (a == 0) continue;
        Rational factor = a;
        if (a % 2 != 0) factor += 2 * ctx.kappa();
        std::vector<int> lowered = exp;
        --lowered[idx];
        result.add_term(lowered, c * factor);
    }
    return result;
}

XPoly laplacian(const OperatorContext& ctx, const XPoly& f) {
    XPoly result(ctx.nvars());
    for (int i = 1; i <= ctx.nvars(); ++i)
        result += dunkl(ctx, i, dunkl(ctx, i, f));
    return result;
}

XPoly reflection(int i, const XPoly& f) {
    XPoly result(f.nvars());
    const size_t idx = static_cast<size_t>(i - 1);
    for (const auto& [exp, c] : f.terms())
        result.add_term(exp, exp[idx] % 2 == 0 ? c : Rational(-c));
    return result;
}

namespace {

XPoly shift_up(const XPoly& f, int i) {
    // Multiply by x_i.
    XPoly result(f.nvars());
    for (const auto& [exp, c] : f.terms()) {
        std::vector<int> raised = exp;
        ++raised[static_cast<size_t>(i - 1)];
        result.add_term(raised, c);
    }
    return result;
}

XPoly euler(const OperatorContext& ctx, const XPoly& f) {
    XPoly result(ctx.nvars());
    for (int i = 1; i <= ctx.nvars(); ++i)
        result += shift_up(dunkl(ctx, i, f), i);
    return result;
}

XPoly radius_squared(int nvars) {
    XPoly r2(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> exp(static_cast<size_t>(nvars), 0);
        exp[static_cast<size_t>(i)] = 2;
        r2.add_term(exp, 1);
    }
    return r2;
}

}  // namespace

XPoly angular(const OperatorContext& ctx, int i, int j, const XPoly& f) {
    if (i == j) throw std::invalid_argument("angular: indices must differ");
    return shift_up(dunkl(ctx, j, f), i) - shift_up(dunkl(ctx, i, f), j);
}

XPoly casimir(const OperatorContext& ctx, const XPoly& f) {
    XPoly result(ctx.nvars());
    for (int i = 1; i <= ctx.nvars(); ++i)
        for (int j = i + 1; j <= ctx.nvars(); ++j)
            result += angular(ctx, i, j, angular(ctx, i, j, f));
    return result;
}

XPoly casimir_via_identity(const OperatorContext& ctx, const XPoly& f) {
    const int N = ctx.nvars();
    XPoly ef = euler(ctx, f);
    XPoly result = radius_squared(N) * laplacian(ctx, f);
    result -= euler(ctx, ef);
    result -= ef * Rational(N - 2);
    XPoly refl_sum(N);
    for (int i = 1; i <= N; ++i) refl_sum += reflection(i, ef);
    result -= refl_sum * Rational(2 * ctx.kappa());
    return result;
}

Rational pairing_h_oracle(const OperatorContext& ctx, const XPoly& f,
                          const XPoly& g) {
    Rational total = 0;
    for (const auto& [exp, c] : f.terms()) {
        XPoly acted = g;
        for (int i = 1; i <= ctx.nvars() && !acted.is_zero(); ++i)
            for (int k = 0; k < exp[static_cast<size_t>(i - 1)]; ++k)
                acted = dunkl(ctx, i, acted);
        total += c * acted.constant_term();
    }
    return total;
}

XPoly materialize_sym(const SymPoly& f, int N) {
    XPoly result(N);
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.length() > N)
            throw std::invalid_argument("materialize_sym: key longer than N");
        std::vector<int> alpha(static_cast<size_t>(N), 0);
        std::copy(lambda.parts().begin(), lambda.parts().end(), alpha.begin());
        std::sort(alpha.begin(), alpha.end());
        do {
            std::vector<int> exp(alpha.size());
            for (size_t i = 0; i < alpha.size(); ++i) exp[i] = 2 * alpha[i];
            result.add_term(exp, c);
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    return result;
}

Rational intertwine_monomial(std::span<const int> alpha,
                             const Rational& kappa) {
    Rational value = 1;
    const Rational half(1, 2);
    for (int a : alpha) {
        unsigned long m = static_cast<unsigned long>((a + 1) / 2);
        Rational denom = pochhammer(kappa + half, m);
        if (denom == 0)
            throw std::domain_error("intertwine_monomial: kappa pole");
        value *= pochhammer(half, m) / denom;
    }
    return value;
}

bool laplacian_power_identity_check(const OperatorContext& ctx,
                                    const XPoly& f, int j, int s) {
    const int N = ctx.nvars();
    int m = 0;
    if (!f.is_zero())
        m = std::accumulate(f.terms().begin()->first.begin(),
                            f.terms().begin()->first.end(), 0);
    XPoly r2 = radius_squared(N);
    XPoly lhs = f;
    for (int k = 0; k < j; ++k) lhs = lhs * r2;
    for (int k = 0; k < s; ++k) lhs = laplacian(ctx, lhs);

    Rational scalar = pow2(2 * s) *
                      pochhammer(Rational(-j), static_cast<unsigned long>(s)) *
                      pochhammer(Rational(-m - j + 1) - Rational(N) / 2 -
                                     Rational(N) * ctx.kappa(),
                                 static_cast<unsigned long>(s));
    XPoly rhs(N);
    if (scalar != 0 && s <= j) {
        rhs = f * scalar;
        for (int k = 0; k < j - s; ++k) rhs = rhs * r2;
    }
    return lhs == rhs;
}

}  // namespace bnharm
