#pragma once

#include <utility>
#include <vector>

#include "pkorder/ring.hpp"

namespace pkorder {

// unit * prod(factor^exp) reproduces the input exactly; factors are canonical
// (positive primes, monic over F_p, primitive positive leading coefficient
// over Z[x]) and sorted.
struct Factorization {
    Poly unit;
    std::vector<std::pair<Poly, int>> factors;
};

Factorization factor(const BaseRing& ring, const Poly& a, const Limits& lim = {});

bool is_prime_int(const Int& n);
bool is_irreducible(const BaseRing& ring, const Poly& a, const Limits& lim = {});

struct VMin {
    std::vector<Height1Prime> primes;       // sorted canonically
    std::vector<int> vanishing_components;  // components where a is zero
};

VMin v_min(const Ring& r, const Elem& a, const Limits& lim = {});

// Divisor of num/den, both non-zero-divisors.
Divisor divisor_of(const Ring& r, const Elem& num, const Elem& den, const Limits& lim = {});

}  // namespace pkorder
