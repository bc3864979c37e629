#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pkorder/limits.hpp"

namespace pkorder {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z. Coefficient i is the coefficient of
// x^i; no trailing zeros are stored, the zero polynomial has no coefficients.
// Elements of every backend ring are carried as Poly values: integers are the
// degree <= 0 case, F_p[x] elements keep coefficients reduced into [0, p).
class Poly {
  public:
    Poly() = default;
    Poly(long v) : Poly(Int(v)) {}
    explicit Poly(Int v) {
        if (v != 0) c_.push_back(std::move(v));
    }

    static Poly monomial(Int coef, int degree);
    static Poly from_coeffs(std::vector<Int> coeffs);
    static Poly x() { return monomial(1, 1); }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    // Coefficient of x^i (zero outside the stored range).
    const Int& coeff(int i) const;
    const Int& lc() const { return c_.back(); }  // nonzero input only
    // Constant term as integer; requires is_constant().
    const Int& as_int() const;

    Poly shifted(int by) const;  // multiply by x^by
    Poly derivative() const;
    Int content() const;  // gcd of coefficients, nonnegative
    Int height() const;   // max |coefficient|

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend Poly operator*(const Int& k, const Poly& a);

    bool operator==(const Poly&) const = default;

  private:
    std::vector<Int> c_;
    void trim();
};

// Canonical order used for prime labels and deterministic output: by degree,
// then coefficients compared from the leading one down.
std::strong_ordering canonical_cmp(const Poly& a, const Poly& b);

// Exact division over Z[x]; returns false if b does not divide a.
bool try_divexact_z(const Poly& a, const Poly& b, Poly& quot);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
Poly pseudo_rem(const Poly& a, const Poly& b);

std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text);  // grammar: ints, x, + - * ^, parens

}  // namespace pkorder
