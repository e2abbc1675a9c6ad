#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace biplan {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Every coordinate, length and cost in the library is a Scalar; nothing is
/// ever rounded. The textual form is "p" when the denominator is 1 and "p/q"
/// otherwise, which is also the canonical serialization in JSON files.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t v);  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t num, std::int64_t den);
    explicit Scalar(mpq_class v);

    /// Parses "p", "-p", "p/q". Throws biplan::Error(ParseError) on malformed input
    /// or a zero denominator.
    static Scalar parse(std::string_view text);

    std::string str() const;
    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }
    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// True when this value is an integer multiple of `step` (step > 0).
    bool is_multiple_of(const Scalar& step) const;

    /// Largest integer k with k <= value, as an exact Scalar.
    Scalar floor() const;
    Scalar ceil() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class value_;
};

inline Scalar abs(const Scalar& v) { return v.sign() < 0 ? -v : v; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& v);

/// lcm(acc, denominator of v).
mpz_class common_denominator(const mpz_class& acc, const Scalar& v);

}  // namespace biplan

template <>
struct std::hash<biplan::Scalar> {
    std::size_t operator()(const biplan::Scalar& s) const noexcept { return s.hash(); }
};
