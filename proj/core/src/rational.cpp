#include "germsum/rational.hpp"

#include <cmath>
#include <limits>

namespace germsum {

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw error("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw error("rational literal must be decimal-free: '" + text + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw error("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw error("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double log_abs(const Rational& q) {
    if (q == 0) return -std::numeric_limits<double>::infinity();
    long en = 0, ed = 0;
    const double dn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
    return std::log(std::fabs(dn)) - std::log(std::fabs(dd)) +
           static_cast<double>(en - ed) * std::log(2.0);
}

double log_abs(const GaussRational& z) {
    if (z.is_zero()) return -std::numeric_limits<double>::infinity();
    if (z.im == 0) return log_abs(z.re);
    if (z.re == 0) return log_abs(z.im);
    return 0.5 * log_abs(z.norm_sq());
}

double abs_double(const GaussRational& z) {
    return std::exp(log_abs(z));
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::string format_gauss(const GaussRational& z) {
    return format_rational(z.re) + (z.im >= 0 ? "+" : "") + format_rational(z.im) + "i";
}

}  // namespace germsum
