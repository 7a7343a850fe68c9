#include "ainfty/scalar.hpp"

namespace ainfty {

std::string to_string(Field f) {
    return f == Field::Rational ? "rational" : "mod2";
}

Field field_from_string(const std::string& s) {
    if (s == "rational") return Field::Rational;
    if (s == "mod2") return Field::ModTwo;
    throw std::invalid_argument("unknown field: " + s);
}

void Scalar::normalize() {
    if (field_ != Field::ModTwo) return;
    boost::multiprecision::cpp_int num = numerator(v_);
    boost::multiprecision::cpp_int den = denominator(v_);
    if (den % 2 == 0)
        throw std::invalid_argument("scalar " + v_.str() + " has no image mod 2");
    // Odd denominators are units mod 2, so the value reduces to its numerator's parity.
    v_ = (num % 2 != 0) ? 1 : 0;
}

void Scalar::check_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("mixed-field scalar arithmetic");
}

Scalar Scalar::parse(Field f, const std::string& text) {
    auto bad = [&] { return std::invalid_argument("bad coefficient: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Scalar(f, Rational(boost::multiprecision::cpp_int(text)));
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Scalar(f, Rational(num, den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field(o);
    v_ += o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field(o);
    v_ -= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field(o);
    v_ *= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_field(o);
    if (o.is_zero()) throw std::invalid_argument("division by zero scalar");
    v_ /= o.v_;
    normalize();
    return *this;
}

std::string Scalar::str() const {
    return v_.str();
}

Scalar sign_pow(Field f, long long exponent) {
    if (f == Field::ModTwo) return Scalar::one(f);
    bool odd = (exponent % 2) != 0;
    return odd ? Scalar::of_int(f, -1) : Scalar::one(f);
}

Scalar koszul_sign(Field f, long long map_degree, const std::vector<int>& passed_degrees) {
    long long sum = 0;
    for (int d : passed_degrees) sum += d;
    return sign_pow(f, map_degree * sum);
}

}  // namespace ainfty
