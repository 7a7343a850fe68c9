#pragma once

/* Exact coefficient arithmetic: arbitrary-precision rationals or integers mod 2.
 * No floating point anywhere; every operation is exact. */

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace ainfty {

using Rational = boost::multiprecision::cpp_rational;

enum class Field { Rational, ModTwo };

std::string to_string(Field f);
Field field_from_string(const std::string& s);

class Scalar {
public:
    explicit Scalar(Field f) : field_(f), v_(0) {}
    Scalar(Field f, Rational v) : field_(f), v_(std::move(v)) { normalize(); }

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, Rational(1)); }
    static Scalar of_int(Field f, long long n) { return Scalar(f, Rational(n)); }
    // Accepts "n" or "p/q"; exact, no rounding.
    static Scalar parse(Field f, const std::string& text);

    Field field() const { return field_; }
    const Rational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }

    std::string str() const;

private:
    void normalize();
    void check_field(const Scalar& o) const;

    Field field_;
    Rational v_;
};

/* (-1)^e in the given field; the exponent may be negative.  Mod 2 this is 1. */
Scalar sign_pow(Field f, long long exponent);

/* Sign picked up when a map of the given degree moves past the listed entries:
 * (-1)^(map_degree * sum of degrees). */
Scalar koszul_sign(Field f, long long map_degree, const std::vector<int>& passed_degrees);

}  // namespace ainfty
