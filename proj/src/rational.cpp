#include "arthur/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace arthur {

Rat::Rat(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat& Rat::operator+=(const Rat& o) {
    *this = Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

std::string rat_to_string(const Rat& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        out += '/';
        out += std::to_string(r.denominator());
    }
    return out;
}

std::optional<Rat> parse_rat(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;
    long long num = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        num = num * 10 + (text[pos] - '0');
        ++pos;
    }
    long long den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return std::nullopt;
        den = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            den = den * 10 + (text[pos] - '0');
            ++pos;
        }
        if (den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    Rat r(num, den);
    return neg ? -r : r;
}

GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }

std::string gauss_to_string(const GaussRat& s) {
    if (s.im == 0) return rat_to_string(s.re);
    if (s.re == 0) return rat_to_string(s.im) + "i";
    return rat_to_string(s.re) + "+" + rat_to_string(s.im) + "i";
}

}  // namespace arthur
