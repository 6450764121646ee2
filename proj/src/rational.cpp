#include "taut/rational.hpp"

#include <cctype>

namespace taut {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial_odd(unsigned k) {
    if (k == 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), 2 * k - 1);
    return r;
}

}  // namespace taut
