#include "tlocus/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace tlocus {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
    if (text.empty())
        return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size())
        return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            return false;
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num))
            throw ParseError("not a rational number: '" + std::string(text) + "'");
    } else {
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        if (den == 0)
            throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational from_double(double value) {
    if (!std::isfinite(value))
        throw std::domain_error("cannot convert non-finite double to a rational");
    Rational r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

Rational best_rational_approximation(double value, const Integer& max_den) {
    if (!std::isfinite(value))
        throw std::domain_error("cannot approximate non-finite double");
    const Rational x = from_double(value);
    // Convergents h/k of the continued fraction of x.
    Integer h_prev = 1, h = 0;
    Integer k_prev = 0, k = 1;
    Rational rest = x;
    Integer h2, k2;
    while (true) {
        Integer a = rest.get_num() / rest.get_den();
        if (rest < 0 && a * rest.get_den() != rest.get_num())
            a -= 1; // floor for negatives
        h2 = a * h_prev + h;
        k2 = a * k_prev + k;
        if (k2 > max_den) {
            // Largest admissible semiconvergent versus the last convergent.
            const Integer t = (max_den - k) / k_prev;
            const Rational semi(Integer(t * h_prev + h), Integer(t * k_prev + k));
            const Rational conv(h_prev, k_prev);
            const Rational d_semi = abs(Rational(semi - x));
            const Rational d_conv = abs(Rational(conv - x));
            Rational out = d_semi < d_conv ? semi : conv;
            out.canonicalize();
            return out;
        }
        h = h_prev;
        k = k_prev;
        h_prev = h2;
        k_prev = k2;
        const Rational frac = rest - Rational(a);
        if (frac == 0)
            break;
        rest = 1 / frac;
    }
    Rational out(h_prev, k_prev);
    out.canonicalize();
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0)
        return Rational(1);
    if (exponent < 0 && base == 0)
        throw std::domain_error("zero raised to a negative power");
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

RationalVector zeros(std::size_t n) { return RationalVector(n, Rational(0)); }

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool all_positive(const RationalVector& v) {
    for (const auto& x : v)
        if (x <= 0)
            return false;
    return true;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector add: length mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector subtract: length mismatch");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = s * v[i];
    return out;
}

void axpy(RationalVector& y, const Rational& a, const RationalVector& x) {
    if (y.size() != x.size())
        throw std::invalid_argument("axpy: length mismatch");
    if (a == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i] != 0)
            y[i] += a * x[i];
}

std::vector<double> to_doubles(const RationalVector& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_d();
    return out;
}

Integer common_denominator(const RationalVector& v) {
    Integer l = 1;
    for (const auto& x : v)
        if (x.get_den() != 1)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

} // namespace tlocus
