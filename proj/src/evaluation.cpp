#include "bnharm/evaluation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace bnharm {

namespace {

void require_tilde(const Partition& lambda, const char* who) {
    if (lambda.part(1) != lambda.part(2))
        throw std::invalid_argument(std::string(who) +
                                    ": first two parts must be equal");
}

// sum over alpha in N_0^L, |alpha| = s, of prod_i p_{alpha_i}(args[i]),
// where pp[j] is the p-polynomial of index j.
Rational composition_sum(const std::vector<UniPoly>& pp,
                         const std::vector<Rational>& args, int s) {
    Rational total = 0;
    std::function<void(size_t, int, const Rational&)> rec =
        [&](size_t i, int rest, const Rational& acc) {
            if (acc == 0) return;
            if (i + 1 == args.size()) {
                total += acc * pp[static_cast<size_t>(rest)](args[i]);
                return;
            }
            for (int j = 0; j <= rest; ++j)
                rec(i + 1, rest - j, acc * pp[static_cast<size_t>(j)](args[i]));
        };
    if (args.empty()) {
        if (s == 0) total = 1;
    } else {
        rec(0, s, 1);
    }
    return total;
}

}  // namespace

Rational h_at_first_unit(const Partition& lambda, int N,
                         const Rational& kappa) {
    require_tilde(lambda, "h_at_first_unit");
    const int n = lambda.weight();
    if (n < 2) throw std::invalid_argument("h_at_first_unit: need n >= 2");
    if (lambda.length() > N)
        throw std::invalid_argument("h_at_first_unit: l(lambda) > N");
    Rational b = Rational(n) *
                 Rational(factorial(static_cast<unsigned long>(
                     n - lambda.part(2) - 1)));
    for (int i = 2; i <= lambda.length(); ++i)
        b /= Rational(factorial(static_cast<unsigned long>(lambda.part(i))));
    if ((n - lambda.part(1)) % 2 != 0) b = -b;
    Rational denom = Rational(factorial(static_cast<unsigned long>(n))) *
                     pochhammer(kappa + Rational(1, 2),
                                static_cast<unsigned long>(n)) *
                     Rational(N);
    if (denom == 0) throw std::domain_error("h_at_first_unit: kappa pole");
    return pow2(-n) * b / denom;
}

Rational h_at_ones_direct_padded(const Partition& lambda, int N,
                                 const Rational& kappa) {
    require_tilde(lambda, "h_at_ones_direct");
    if (lambda.length() > N)
        throw std::invalid_argument("h_at_ones_direct: l(lambda) > N");
    const int n = lambda.weight();
    if (n == 0) return 1;
    const RatMatrix& B = transition_B(n, N);
    Rational sum = 0;
    for (const auto& mu : B.col_labels()) {
        if (!preceq(lambda, mu)) continue;
        Rational poch = pochhammer(kappa + Rational(1, 2), mu);
        if (poch == 0) throw std::domain_error("h_at_ones_direct: kappa pole");
        sum += B.at(lambda, mu) /
               (Rational(partition_factorial(mu)) * poch);
    }
    return pow2(-n) * sum;
}

Rational h_at_ones_direct(const Partition& lambda, const Rational& kappa) {
    return h_at_ones_direct_padded(lambda, std::max(lambda.length(), 1),
                                   kappa);
}

Rational h_at_ones_residue(const Partition& lambda, const Rational& kappa) {
    require_tilde(lambda, "h_at_ones_residue");
    const int n = lambda.weight();
    if (n == 0) return 1;
    const int N = lambda.length();
    const int k = lambda.part(1) + (n + 1) / 2;
    const Rational half(1, 2);
    Rational pre_denom =
        pochhammer(kappa + half, static_cast<unsigned long>(k - 1));
    for (int i = 2; i <= N; ++i)
        pre_denom *= pochhammer(kappa + half,
                                static_cast<unsigned long>(lambda.part(i)));
    if (pre_denom == 0)
        throw std::domain_error("h_at_ones_residue: kappa pole");
    const RatMatrix& B = transition_B(n, N);
    Rational sum = 0;
    for (const auto& mu : B.col_labels()) {
        if (!preceq(lambda, mu) || mu.part(1) < k) continue;
        Rational inner = 0;
        for (int j = k; j <= mu.part(1); ++j) {
            Rational pole = kappa - half + j;
            if (pole == 0)
                throw std::domain_error("h_at_ones_residue: kappa pole");
            Rational term = 1;
            for (int i = 2; i <= N; ++i)
                term *= pochhammer(Rational(1 - j + mu.part(i)),
                                   static_cast<unsigned long>(
                                       lambda.part(i) - mu.part(i)));
            term /= Rational(factorial(static_cast<unsigned long>(j - k))) *
                    Rational(factorial(
                        static_cast<unsigned long>(mu.part(1) - j))) *
                    pole;
            if ((j - k) % 2 != 0) term = -term;
            inner += term;
        }
        sum += B.at(lambda, mu) / Rational(partition_factorial(mu)) * inner;
    }
    return pow2(-n) * sum / pre_denom;
}

EvalReport eval_ones(const Partition& lambda, const Rational& kappa) {
    EvalReport report{lambda, kappa, h_at_ones_direct(lambda, kappa),
                      h_at_ones_residue(lambda, kappa), false};
    report.match = report.direct == report.residue;
    return report;
}

DegreeReport q_degree_check(const Partition& lambda) {
    require_tilde(lambda, "q_degree_check");
    const int n = lambda.weight();
    // q_lambda = h_lambda(1^N) (kappa+1/2)_n prod_{i>=2} (kappa+1/2)_{l_i}
    // has a-priori degree <= n - lambda_1; integer nodes avoid all poles.
    const int nodes = n - lambda.part(1) + 1;
    std::vector<std::pair<Rational, Rational>> points;
    for (int t = 1; t <= nodes; ++t) {
        Rational kappa(t);
        Rational scale = pochhammer(kappa + Rational(1, 2),
                                    static_cast<unsigned long>(n));
        for (int i = 2; i <= lambda.length(); ++i)
            scale *= pochhammer(kappa + Rational(1, 2),
                                static_cast<unsigned long>(lambda.part(i)));
        points.emplace_back(kappa, h_at_ones_direct(lambda, kappa) * scale);
    }
    DegreeReport report;
    report.q = UniPoly::interpolate(points);
    report.degree = report.q.degree();
    report.bound = n / 2 - lambda.part(1);
    report.ok = report.degree <= report.bound;
    return report;
}

std::vector<Rational> laurent_coeffs(const Partition& lambda, int s_max) {
    require_tilde(lambda, "laurent_coeffs");
    const int n = lambda.weight();
    const int N = std::max(lambda.length(), 1);
    auto pp = p_polys(static_cast<unsigned>(s_max));
    const RatMatrix& B = transition_B(n, N);
    std::vector<Rational> coeffs(static_cast<size_t>(s_max + 1), Rational(0));
    for (const auto& mu : B.col_labels()) {
        if (!preceq(lambda, mu)) continue;
        Rational weight =
            B.at(lambda, mu) / Rational(partition_factorial(mu));
        std::vector<Rational> args;
        for (int i = 1; i <= N; ++i) args.emplace_back(mu.part(i));
        for (int s = 0; s <= s_max; ++s) {
            Rational c = weight * composition_sum(pp, args, s);
            if (s % 2 != 0) c = -c;
            coeffs[static_cast<size_t>(s)] += c;
        }
    }
    for (auto& c : coeffs) c *= pow2(-n);
    return coeffs;
}

bool laurent_vanishing_check(const Partition& lambda, int j_max) {
    const int n = lambda.weight();
    if (n == 0) return true;
    DegreeReport rep = q_degree_check(lambda);
    if (!rep.ok || rep.q.is_zero()) return false;
    // Exact vanishing order from the interpolated representation: the
    // denominator has kappa-degree 2n - lambda_1.
    const int denom_deg = 2 * n - lambda.part(1);
    const int order = denom_deg - rep.q.degree();
    if (order < (3 * n + 1) / 2) return false;

    std::vector<Rational> route_b = laurent_coeffs(lambda, j_max);

    // Independent expansion of q / denominator as a Laurent series.
    auto pp = p_polys(static_cast<unsigned>(j_max + rep.q.degree()));
    std::vector<Rational> args;
    args.emplace_back(n);
    for (int i = 2; i <= lambda.length(); ++i)
        args.emplace_back(lambda.part(i));
    for (int s = 0; s <= j_max; ++s) {
        const int j = n + s;
        Rational route_a = 0;
        for (int d = 0; d <= rep.q.degree(); ++d) {
            int t = j + d - denom_deg;
            if (t < 0) continue;
            Rational c = rep.q.coeff(d) * composition_sum(pp, args, t);
            if (t % 2 != 0) c = -c;
            route_a += c;
        }
        if (route_a != route_b[static_cast<size_t>(s)]) return false;
        if (j < order && route_a != 0) return false;
        if (j == order && route_a == 0) return false;
    }
    return true;
}

}  // namespace bnharm
