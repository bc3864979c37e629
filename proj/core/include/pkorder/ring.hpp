#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pkorder/poly.hpp"

namespace pkorder {

enum class Kind { Z, FpX, ZX };

// One non-product backend. All element arithmetic is dispatched through here
// so that F_p[x] coefficients stay reduced and Z elements stay constants.
struct BaseRing {
    Kind kind = Kind::Z;
    Int p = 0;  // modulus, FpX only

    bool operator==(const BaseRing&) const = default;

    int dim() const { return kind == Kind::ZX ? 2 : 1; }

    bool is_valid(const Poly& a) const;
    Poly normalize(Poly a) const;  // reduce coefficients for FpX
    Poly add(const Poly& a, const Poly& b) const { return normalize(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return normalize(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return normalize(a * b); }
    Poly neg(const Poly& a) const { return normalize(-a); }

    bool is_unit(const Poly& a) const;
    // canonical associate (positive / monic / positive leading coefficient)
    // and the unit u with canonical = u * a
    std::pair<Poly, Poly> normalize_assoc(const Poly& a) const;

    Poly gcd(const Poly& a, const Poly& b) const;
    bool divides(const Poly& b, const Poly& a) const;  // b | a, b != 0
    Poly divexact(const Poly& a, const Poly& b) const;

    // Euclidean division, Z and FpX only (remainder canonical: 0 <= r < |b|
    // over Z, deg r < deg b over FpX).
    void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) const;

    Int inv_mod_p(const Int& a) const;

    std::string describe() const;  // "Z", "F5[x]", "Z[x]"
};

// A backend ring or a finite product of non-product backends.
struct Ring {
    std::vector<BaseRing> factors;

    Ring() : factors{BaseRing{}} {}
    explicit Ring(BaseRing b) : factors{std::move(b)} {}
    explicit Ring(std::vector<BaseRing> fs) : factors(std::move(fs)) {}

    bool operator==(const Ring&) const = default;
    bool is_product() const { return factors.size() > 1; }
    const BaseRing& base() const;
    size_t ncomp() const { return factors.size(); }
};

// Element of a Ring: one polynomial per component.
struct Elem {
    std::vector<Poly> comp;

    Elem() = default;
    explicit Elem(Poly a) : comp{std::move(a)} {}
    bool operator==(const Elem&) const = default;
    bool is_zero() const;
};

Elem make_elem(const Ring& r, std::vector<Poly> parts);
Elem elem_from_base(const Ring& r, Poly a);  // diagonal embedding of constants
bool elem_is_nonzerodivisor(const Ring& r, const Elem& a);
std::string to_string(const Ring& r, const Elem& a);

// A height-1 prime of a backend, carried by its canonical generator:
// a positive prime integer (degree 0) or a canonical irreducible polynomial
// (monic over F_p, primitive with positive leading coefficient over Z[x]).
// For products, `component` names the factor.
struct Height1Prime {
    int component = 0;
    Poly gen;

    bool operator==(const Height1Prime&) const = default;
};

std::strong_ordering compare(const Height1Prime& a, const Height1Prime& b);
inline bool operator<(const Height1Prime& a, const Height1Prime& b) {
    return compare(a, b) == std::strong_ordering::less;
}

std::string label(const Ring& r, const Height1Prime& P);  // "int:2", "poly:x", "c0:int:2"
Height1Prime parse_prime_label(const Ring& r, std::string_view text);

// Finitely supported valuation map on height-1 primes.
using Divisor = std::map<Height1Prime, long>;

Divisor divisor_add(const Divisor& a, const Divisor& b);

struct QComponent {
    int index = 0;
    std::string desc;  // "Q", "F5(x)", "Q(x)"
};

std::vector<QComponent> components(const Ring& r);

// v_P(a) for a nonzero element of the prime's backend component.
long val_base(const BaseRing& ring, const Poly& a, const Poly& gen);

// v_P(num/den); nullopt encodes +infinity (the relevant component vanishes).
// `den` must be a non-zero-divisor.
std::optional<long> valuation(const Ring& r, const Elem& num, const Elem& den,
                              const Height1Prime& P);

}  // namespace pkorder
