#include "bnharm/rational.hpp"

#include <stdexcept>

namespace bnharm {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

Integer multinomial(unsigned long j, std::span<const long> alpha) {
    long sum = 0;
    for (long a : alpha) sum += a;
    if (sum != static_cast<long>(j))
        throw std::invalid_argument("multinomial: components do not sum to j");
    for (long a : alpha)
        if (a < 0) return 0;
    Integer result = factorial(j);
    for (long a : alpha) result /= factorial(static_cast<unsigned long>(a));
    return result;
}

Rational pochhammer(const Rational& t, unsigned long n) {
    Rational result = 1;
    Rational factor = t;
    for (unsigned long i = 0; i < n; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

Rational pow2(long n) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
    return n >= 0 ? Rational(p) : Rational(1, p);
}

}  // namespace bnharm
