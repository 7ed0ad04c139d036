#include "roughlab/rational.hpp"

#include "roughlab/error.hpp"

#include <cctype>

namespace roughlab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::argument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view token) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) fail(ErrorKind::usage, "malformed rational '" + std::string(token) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

Integer pow10(unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view token = text;
    if (text.empty()) fail(ErrorKind::usage, "empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash), token);
        std::string_view den_part = text.substr(slash + 1);
        if (den_part.empty() || !all_digits(den_part))
            fail(ErrorKind::usage, "malformed rational '" + std::string(token) + "'");
        const Integer den(std::string(den_part), 10);
        if (den == 0) fail(ErrorKind::usage, "zero denominator in '" + std::string(token) + "'");
        return make_rational(num, den);
    }

    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        const Integer ez = parse_integer(text.substr(e + 1), token);
        if (!ez.fits_slong_p() || abs(Rational(ez)) > 100000)
            fail(ErrorKind::usage, "exponent out of range in '" + std::string(token) + "'");
        exponent = ez.get_si();
        text = text.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot), fp = text.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            fail(ErrorKind::usage, "malformed rational '" + std::string(token) + "'");
        digits = std::string(ip) + std::string(fp);
        scale = static_cast<long>(fp.size());
    } else {
        if (!all_digits(text)) fail(ErrorKind::usage, "malformed rational '" + std::string(token) + "'");
        digits = std::string(text);
    }
    if (digits.empty()) digits = "0";
    Integer mant(digits, 10);
    if (neg) mant = -mant;
    const long shift = exponent - scale;
    if (shift >= 0) return Rational(mant * pow10(static_cast<unsigned long>(shift)));
    return make_rational(mant, pow10(static_cast<unsigned long>(-shift)));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer floor(const Rational& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Integer ceil(const Rational& q) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational out(num, den);  // already coprime
    return out;
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational dist_to_Z(const Rational& q) {
    const Rational f = frac(q);
    const Rational g = 1 - f;
    return min(f, g);
}

bool is_dyadic(const Rational& q) {
    const auto& d = q.get_den_mpz_t();
    return mpz_popcount(d) == 1;
}

Rational dyadic_floor(const Rational& q, unsigned long bits) {
    Integer scaled_num = q.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    Rational out(z);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
    return out;
}

Rational dyadic_ceil(const Rational& q, unsigned long bits) {
    Integer scaled_num = q.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    Integer z;
    mpz_cdiv_q(z.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    Rational out(z);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
    return out;
}

unsigned long bits_for(const Rational& tol) {
    if (tol <= 0) fail(ErrorKind::argument, "tolerance must be positive");
    unsigned long k = 0;
    Rational step(1);
    while (step > tol) {
        step /= 2;
        ++k;
    }
    return k;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace roughlab
