#include "toric/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace toric {

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar: division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

namespace {

std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

struct Parser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("scalar: cannot parse \"" + std::string(text) +
                                    "\": " + why);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    Integer read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(std::string(text.substr(start, pos - start)));
    }

    // number := digits [ '/' digits ]; the leading sign is handled by the caller
    Rational read_number() {
        Integer num = read_integer();
        if (peek() == '/') {
            ++pos;
            Integer den = read_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // term := 'i' | number | number 'i'; returns {value, is_imaginary}
    std::pair<Rational, bool> read_term(int sign) {
        skip_ws();
        if (peek() == 'i') {
            ++pos;
            return {Rational(sign), true};
        }
        Rational value = read_number() * sign;
        if (peek() == 'i') {
            ++pos;
            return {value, true};
        }
        return {value, false};
    }
};

}  // namespace

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag_part;
    Rational mag = im_ < 0 ? Rational(-im_) : im_;
    if (mag != 1) imag_part = rational_str(mag);
    imag_part += 'i';
    if (re_ == 0) return (im_ < 0 ? "-" : "") + imag_part;
    return rational_str(re_) + (im_ < 0 ? "-" : "+") + imag_part;
}

Scalar Scalar::parse(std::string_view text) {
    Parser p{text};
    if (p.done()) p.fail("empty input");

    bool have_re = false, have_im = false;
    Rational re(0), im(0);
    for (int term = 0; term < 2; ++term) {
        p.skip_ws();
        int sign = 1;
        if (p.peek() == '+' || p.peek() == '-') {
            if (term == 0 && p.peek() == '+') p.fail("leading '+' not allowed");
            sign = p.peek() == '-' ? -1 : 1;
            ++p.pos;
        } else if (term == 1) {
            p.fail("expected '+' or '-' between terms");
        }
        auto [value, imaginary] = p.read_term(sign);
        if (imaginary) {
            if (have_im) p.fail("two imaginary terms");
            im = value;
            have_im = true;
        } else {
            if (have_re) p.fail("two real terms");
            if (term == 1) p.fail("real term after imaginary term");
            re = value;
            have_re = true;
        }
        if (p.done()) break;
    }
    if (!p.done()) p.fail("trailing characters");
    return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace toric
