#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace tlocus {

class OverflowError : public std::overflow_error {
public:
    OverflowError() : std::overflow_error("64-bit integer overflow") {}
};

/// int64 wrapper whose arithmetic throws OverflowError instead of wrapping.
/// Integer kernels run on this first and retry on mpz_class when it throws.
class CheckedInt {
public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v) : v_(v) {}

    constexpr std::int64_t value() const { return v_; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw OverflowError();
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
        if (b.v_ == -1 && a.v_ == INT64_MIN)
            throw OverflowError();
        return a.v_ / b.v_;
    }
    CheckedInt operator-() const {
        if (v_ == INT64_MIN)
            throw OverflowError();
        return -v_;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

    friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

private:
    std::int64_t v_ = 0;
};

inline int sign_of(CheckedInt x) { return (x.value() > 0) - (x.value() < 0); }
inline int sign_of(const mpz_class& x) { return sgn(x); }
inline bool is_zero_int(CheckedInt x) { return x.value() == 0; }
inline bool is_zero_int(const mpz_class& x) { return sgn(x) == 0; }

inline CheckedInt int_gcd(CheckedInt a, CheckedInt b) {
    if (a.value() == INT64_MIN || b.value() == INT64_MIN)
        throw OverflowError();
    return std::gcd(a.value(), b.value());
}
inline mpz_class int_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class to_mpz(CheckedInt x) { return mpz_class(static_cast<long>(x.value())); }
inline const mpz_class& to_mpz(const mpz_class& x) { return x; }

/// Narrowing conversion used when seeding the fast path.
inline CheckedInt to_checked(const mpz_class& x) {
    if (!x.fits_slong_p())
        throw OverflowError();
    return CheckedInt(x.get_si());
}

} // namespace tlocus
