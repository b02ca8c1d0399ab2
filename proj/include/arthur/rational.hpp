#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

namespace arthur {

// Exact rational arithmetic. All coordinates, parameters and characters in
// this library are exact; no floating point appears anywhere. The values
// are tiny (half-integers of parameter size), so long long is ample.
//
// boost::rational is not used: its integer comparison operators recurse
// endlessly under C++20 with the toolchain's boost 1.74.
class Rat {
  public:
    Rat() = default;
    Rat(long long n) : num_(n) {}  // implicit on purpose
    Rat(long long n, long long d);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o) { return *this += -o; }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rat&, const Rat&) = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

  private:
    long long num_ = 0;
    long long den_ = 1;  // always > 0, gcd(num_, den_) = 1
};

std::string rat_to_string(const Rat& r);
std::optional<Rat> parse_rat(std::string_view text);

// Gaussian rational a + bi, used for the s-slot of W_R summands.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(r), im(i) {}
    explicit GaussRat(long long r) : re(r), im(0) {}

    bool is_zero() const { return re == Rat(0) && im == Rat(0); }
    GaussRat negated() const { return {-re, -im}; }

    friend bool operator==(const GaussRat&, const GaussRat&) = default;
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

GaussRat operator+(const GaussRat& a, const GaussRat& b);
GaussRat operator-(const GaussRat& a, const GaussRat& b);

// Renders "0", "3/2", "2i", "-1/2i"; mixed real+imaginary pairs only occur
// in diagnostics and render as "re+imi".
std::string gauss_to_string(const GaussRat& s);

}  // namespace arthur
