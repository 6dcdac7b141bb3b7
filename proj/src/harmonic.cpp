#include "bnharm/harmonic.hpp"

#include <stdexcept>
#include <utility>

namespace bnharm {

namespace {

// lambda! (kappa+1/2)_lambda m_lambda(1^N); the recurring normalizing
// weight. Throws when kappa sits on a pole.
Rational weight_factor(const Partition& lambda, int N, const Rational& kappa) {
    Rational poch = pochhammer(kappa + Rational(1, 2), lambda);
    if (poch == 0)
        throw std::domain_error("weight_factor: kappa pole for " +
                                lambda.str());
    return Rational(partition_factorial(lambda)) * poch *
           Rational(m_at_ones(lambda, N));
}

Partition drop_first(const Partition& mu, int i) {
    std::vector<int> parts = mu.parts();
    parts[0] -= i;
    return Partition(std::move(parts));
}

}  // namespace

std::map<Partition, Rational> kernel_KB(int n, int N, const Rational& kappa) {
    std::map<Partition, Rational> coeffs;
    for (const auto& lambda : enumerate_partitions(n, N, false))
        coeffs[lambda] = pow2(-2 * n) / weight_factor(lambda, N, kappa);
    return coeffs;
}

HarmonicExpansion h_expansion(const Partition& mu, int N,
                              const Rational& kappa) {
    if (mu.length() > N)
        throw std::invalid_argument("h_expansion: l(mu) > N");
    const int n = mu.weight();
    const RatMatrix& B = transition_B(n, N);
    HarmonicExpansion h{mu, N, kappa, SymPoly(n)};
    const Rational scale = pow2(-n);
    for (const auto& lambda : B.col_labels()) {
        if (!preceq(mu, lambda)) continue;
        const Rational& b = B.at(mu, lambda);
        if (b == 0) continue;
        h.coeffs.add(lambda, scale * b / weight_factor(lambda, N, kappa));
    }
    return h;
}

bool check_laph(const Partition& mu, int N, const Rational& kappa) {
    const int n = mu.weight();
    OperatorContext ctx(N, kappa, 2 * n + 2);
    XPoly lap = laplacian(ctx, materialize_sym(h_expansion(mu, N, kappa).coeffs, N));
    if (mu.part(1) == mu.part(2)) return lap.is_zero();
    XPoly target =
        materialize_sym(h_expansion(drop_first(mu, 1), N, kappa).coeffs, N) *
        Rational(2);
    return lap == target;
}

RadialLayered g_expansion(const Partition& lambda, int N,
                          const Rational& kappa) {
    if (lambda.part(1) != lambda.part(2))
        throw std::invalid_argument(
            "g_expansion: first two parts must be equal");
    if (lambda.length() > N)
        throw std::invalid_argument("g_expansion: l(lambda) > N");
    const int n = lambda.weight();
    RadialLayered g;
    for (int j = 0; j <= n; ++j) {
        Rational denom =
            Rational(factorial(static_cast<unsigned long>(j))) *
            pochhammer(Rational(-2 * n + 2) - Rational(N) / 2 -
                           Rational(N) * kappa,
                       static_cast<unsigned long>(j));
        if (denom == 0)
            throw std::domain_error("g_expansion: vanishing denominator");
        SymPoly layer(n - j);
        for (const auto& sigma : enumerate_partitions(n - j, N, false)) {
            if (!contains(sigma, lambda)) continue;
            layer.add(sigma, Rational(e1_coeff(lambda, sigma)) /
                                 weight_factor(sigma, N, kappa));
        }
        layer *= Rational(1) / denom;
        if (!layer.is_zero()) g.layers.emplace_back(j, std::move(layer));
    }
    return g;
}

SymPoly flatten_radial(const RadialLayered& f, int N) {
    if (f.layers.empty()) return SymPoly();
    SymPoly result(f.layers.front().first + f.layers.front().second.degree());
    for (const auto& [j, part] : f.layers)
        result += e1_pow_mul(j, part, N);
    return result;
}

RadialLayered radial_layers(const Partition& mu, int N,
                            const Rational& kappa) {
    const int n = mu.weight();
    const int k = mu.part(1) - mu.part(2);
    // a(i,j): scalar with Lap^j e1^i phi = a(i,j) e1^{i-j} phi for phi an
    // invariant harmonic of x-degree 2(n-i).
    auto a = [&](int i, int j) -> Rational {
        return pow2(2 * j) *
               pochhammer(Rational(-i), static_cast<unsigned long>(j)) *
               pochhammer(Rational(-2 * n + i + 1) - Rational(N) / 2 -
                              Rational(N) * kappa,
                          static_cast<unsigned long>(j));
    };
    std::vector<SymPoly> phi(static_cast<size_t>(k + 1));
    // Lap^j h_mu = 2^j h_{mu - j e1}; solve the triangular system from the
    // top layer down.
    for (int j = k; j >= 0; --j) {
        SymPoly rhs = h_expansion(drop_first(mu, j), N, kappa).coeffs *
                      pow2(j);
        for (int i = j + 1; i <= k; ++i) {
            SymPoly shifted =
                e1_pow_mul(i - j, phi[static_cast<size_t>(i)], N);
            shifted *= -a(i, j);
            rhs += shifted;
        }
        Rational diag = a(j, j);
        if (diag == 0)
            throw std::domain_error("radial_layers: singular layer system");
        phi[static_cast<size_t>(j)] = rhs * (Rational(1) / diag);
    }
    RadialLayered result;
    for (int j = 0; j <= k; ++j)
        if (!phi[static_cast<size_t>(j)].is_zero())
            result.layers.emplace_back(j, std::move(phi[static_cast<size_t>(j)]));
    return result;
}

Rational pairing_h_fast(const SymPoly& f, const SymPoly& g, int N,
                        const Rational& kappa) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree()) return 0;
    const int n = f.degree();
    Rational total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        Rational other = g.coeff(lambda);
        if (other == 0) continue;
        total += c * other * pow2(2 * n) * weight_factor(lambda, N, kappa);
    }
    return total;
}

bool biorthogonality_check(const Partition& lambda, const Partition& mu,
                           int N, const Rational& kappa) {
    SymPoly g = flatten_radial(g_expansion(lambda, N, kappa), N);
    SymPoly h = h_expansion(mu, N, kappa).coeffs;
    Rational value = pairing_h_fast(g, h, N, kappa);
    Rational expected = 0;
    if (lambda == mu)
        expected = pow2(lambda.weight()) / weight_factor(lambda, N, kappa);
    return value == expected;
}

RatMatrix gram_matrix(int n, int N, const Rational& kappa, bool tilde_only) {
    auto labels = enumerate_partitions(n, N, tilde_only);
    const RatMatrix& B = transition_B(n, N);
    RatMatrix G(labels, labels);
    for (int i = 0; i < G.rows(); ++i)
        for (int j = i; j < G.cols(); ++j) {
            const Partition& lam = labels[static_cast<size_t>(i)];
            const Partition& mu = labels[static_cast<size_t>(j)];
            Rational sum = 0;
            for (const auto& sigma : B.col_labels()) {
                if (!preceq(lam, sigma) || !preceq(mu, sigma)) continue;
                sum += B.at(lam, sigma) * B.at(mu, sigma) /
                       weight_factor(sigma, N, kappa);
            }
            G.at(i, j) = sum;
            if (i != j) G.at(j, i) = sum;
        }
    return G;
}

Rational gram_det_closed(int n, int N, const Rational& kappa) {
    if (n <= 1) return 1;
    Rational det = 1;
    for (const auto& lambda : enumerate_partitions(n, N, true))
        det /= weight_factor(lambda, N, kappa);
    for (const auto& mu : enumerate_partitions(n - 1, N, false)) {
        int top = mu.part(1), second = mu.part(2);
        int mult = 0;
        for (int j = 1; j <= mu.length(); ++j)
            if (mu.part(j) == top) ++mult;
        Rational numer = Rational(top - second + 1) *
                         (Rational(2 * n - 2 - top + second) +
                          Rational(N) / 2 + Rational(N) * kappa);
        Rational denom = Rational(top + 1) *
                         (kappa + Rational(1, 2) + top) * Rational(mult);
        if (denom == 0)
            throw std::domain_error("gram_det_closed: kappa pole");
        det *= numer / denom;
    }
    return det;
}

Rational gram_det_unsimplified(int n, int N, const Rational& kappa) {
    if (n <= 1) return 1;
    auto big_d = [&](int m) {
        Rational d = 1;
        for (const auto& lambda : enumerate_partitions(m, N, false))
            d /= weight_factor(lambda, N, kappa);
        return d;
    };
    Rational det = big_d(n) / big_d(n - 1);
    for (int i = 1; i <= n; ++i) {
        Integer e = count_tilde(n - i, N);
        if (e == 0) continue;
        Rational base = Rational(i) * (Rational(2 * n - i - 1) +
                                       Rational(N) / 2 + Rational(N) * kappa);
        for (Integer k = 0; k < e; ++k) det *= base;
    }
    return det;
}

Rational sphere_pairing(const SymPoly& f, const SymPoly& g, int N,
                        const Rational& kappa) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree()) return 0;
    const int n = f.degree();
    Rational scale = pochhammer(Rational(N) / 2 + Rational(N) * kappa,
                                static_cast<unsigned long>(2 * n));
    if (scale == 0) throw std::domain_error("sphere_pairing: kappa pole");
    return pairing_h_fast(f, g, N, kappa) * pow2(-2 * n) / scale;
}

Rational casimir_eigenvalue(int n, int N, const Rational& kappa) {
    return Rational(-2 * n) *
           (Rational(N - 2 + 2 * n) + 2 * Rational(N) * kappa);
}

}  // namespace bnharm
