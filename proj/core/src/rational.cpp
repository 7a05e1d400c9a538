#include "cuntz/rational.hpp"

#include <stdexcept>

namespace cuntz {

Rational rational_pow(int n, int m) {
    if (n < 2) throw std::invalid_argument("rational_pow: base must be >= 2");
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(m >= 0 ? m : -m));
    Rational r(p);
    if (m < 0) r = 1 / r;
    return r;
}

std::optional<int> integer_log(const Rational& r, int n) {
    if (n < 2) throw std::invalid_argument("integer_log: base must be >= 2");
    if (sgn(r) <= 0) throw std::invalid_argument("integer_log: argument must be positive");
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    // In lowest terms n^m is either n^m / 1 or 1 / n^-m.
    if (num == 1 && den == 1) return 0;
    if (den == 1) {
        Integer p = num;
        int m = 0;
        while (mpz_divisible_ui_p(p.get_mpz_t(), static_cast<unsigned long>(n))) {
            p /= n;
            ++m;
        }
        if (p == 1) return m;
        return std::nullopt;
    }
    if (num == 1) {
        auto m = integer_log(Rational(den), n);
        if (m) return -*m;
        return std::nullopt;
    }
    return std::nullopt;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

}  // namespace cuntz
