#include "freeid/rational.hpp"

#include "freeid/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace freeid {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& n) { return n.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    BigInt n(std::string(digits), 10);
    return (!s.empty() && s.front() == '-') ? BigInt(-n) : n;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
        BigInt den(std::string(den_text), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // decimal with optional exponent
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string exp_text(text.substr(e + 1));
        char* end = nullptr;
        exponent = std::strtol(exp_text.c_str(), &end, 10);
        if (exp_text.empty() || *end != '\0') throw ParseError("bad exponent in '" + std::string(text) + "'");
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view ip = mantissa.substr(0, dot);
        std::string_view fp = mantissa.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    } else {
        if (!all_digits(mantissa)) throw ParseError("not a rational number: '" + std::string(text) + "'");
        digits = std::string(mantissa);
    }
    Rational r{BigInt(digits, 10)};
    long shift = exponent - frac_len;
    BigInt ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        r *= ten_pow;
    else
        r /= ten_pow;
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

double to_double(const Rational& r) {
    // truncates toward zero, so within one ulp
    return mpq_get_d(r.get_mpq_t());
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt double_factorial(int n) {
    if (n <= 0) return 1;
    BigInt f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

BigInt catalan(unsigned n) {
    BigInt c = binomial(2 * n, n);
    c /= (n + 1);
    return c;
}

Rational pow(const Rational& r, unsigned e) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(r.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(r.get_mpq_t()), e);
    return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace freeid
