#pragma once

#include <vector>

#include "pkorder/ring.hpp"

namespace pkorder {

// Reduced fraction of backend elements. Canonical: gcd(num, den) = 1 and the
// denominator is its canonical associate (positive / monic / positive lc).
struct Frac {
    Poly num;
    Poly den = Poly(1);

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const Frac&) const = default;
};

Frac make_frac(const BaseRing& R, Poly num, Poly den);
inline Frac from_poly(Poly a) { return Frac{std::move(a), Poly(1)}; }

Frac fadd(const BaseRing& R, const Frac& a, const Frac& b);
Frac fsub(const BaseRing& R, const Frac& a, const Frac& b);
Frac fmul(const BaseRing& R, const Frac& a, const Frac& b);
Frac fdiv(const BaseRing& R, const Frac& a, const Frac& b);
Frac fneg(const BaseRing& R, const Frac& a);

std::string to_string(const Frac& f);

using FracVec = std::vector<Frac>;
using FracMat = std::vector<FracVec>;
using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<PolyVec>;

FracMat to_frac_mat(const PolyMat& m);
int frac_rank(const BaseRing& R, FracMat m);

// Basis of { v : m * v = 0 } as columns, cleared to ring entries.
// Returns a (cols x nullity) matrix.
PolyMat right_nullspace_cleared(const BaseRing& R, const FracMat& m);

// Determinant of a square matrix over the fraction field.
Frac frac_det(const BaseRing& R, FracMat m);

// Least common multiple of the denominators appearing in a matrix.
Poly common_denominator(const BaseRing& R, const FracMat& m);

FracMat frac_mul(const BaseRing& R, const FracMat& a, const FracMat& b);

}  // namespace pkorder
