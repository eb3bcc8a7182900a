#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plc {

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator; no operation rounds.
class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p/q" or "p" with an optional leading sign. Non-reduced input is
    /// normalized; q = 0 and anything else malformed raise ParseError.
    static Rat parse(std::string_view text);

    /// Always "p/q", q > 0, lowest terms (integers print as "n/1").
    [[nodiscard]] std::string str() const;

    [[nodiscard]] const mpq_class& gmp() const noexcept { return v_; }
    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

    [[nodiscard]] Rat floor() const;
    [[nodiscard]] Rat ceil() const;
    [[nodiscard]] Rat abs() const { return Rat(::abs(v_)); }
    [[nodiscard]] Rat frac() const { return *this - floor(); }
    [[nodiscard]] int sign() const noexcept { return sgn(v_); }
    [[nodiscard]] bool is_integer() const noexcept { return v_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return v_.get_d(); }
    /// Integer value; raises OutOfRange when not an integer or too large for int64.
    [[nodiscard]] std::int64_t to_int64() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class v_;
};

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// Nearest integer, ties to even.
Rat round_half_even(const Rat& r);

} // namespace plc
