#include "pkorder/frac.hpp"

namespace pkorder {

Frac make_frac(const BaseRing& R, Poly num, Poly den) {
    if (den.is_zero()) throw InputError("zero denominator");
    if (num.is_zero()) return Frac{};
    Poly g = R.gcd(num, den);
    if (!R.is_unit(g)) {
        num = R.divexact(num, g);
        den = R.divexact(den, g);
    }
    auto [dcan, u] = R.normalize_assoc(den);
    return Frac{R.mul(num, u), dcan};
}

Frac fadd(const BaseRing& R, const Frac& a, const Frac& b) {
    return make_frac(R, R.add(R.mul(a.num, b.den), R.mul(b.num, a.den)), R.mul(a.den, b.den));
}

Frac fsub(const BaseRing& R, const Frac& a, const Frac& b) {
    return make_frac(R, R.sub(R.mul(a.num, b.den), R.mul(b.num, a.den)), R.mul(a.den, b.den));
}

Frac fmul(const BaseRing& R, const Frac& a, const Frac& b) {
    return make_frac(R, R.mul(a.num, b.num), R.mul(a.den, b.den));
}

Frac fdiv(const BaseRing& R, const Frac& a, const Frac& b) {
    if (b.is_zero()) throw InputError("division by zero fraction");
    return make_frac(R, R.mul(a.num, b.den), R.mul(a.den, b.num));
}

Frac fneg(const BaseRing& R, const Frac& a) { return Frac{R.neg(a.num), a.den}; }

std::string to_string(const Frac& f) {
    if (f.den == Poly(1)) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

FracMat to_frac_mat(const PolyMat& m) {
    FracMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const Poly& p : m[i]) out[i].push_back(from_poly(p));
    }
    return out;
}

namespace {

// Gauss elimination to row echelon form; returns pivot columns.
std::vector<int> echelonize(const BaseRing& R, FracMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Frac inv = m[rank][c];
        for (size_t j = c; j < cols; ++j) m[rank][j] = fdiv(R, m[rank][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Frac f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] = fsub(R, m[i][j], fmul(R, f, m[rank][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++rank;
    }
    return pivots;
}

}  // namespace

int frac_rank(const BaseRing& R, FracMat m) {
    return static_cast<int>(echelonize(R, m).size());
}

PolyMat right_nullspace_cleared(const BaseRing& R, const FracMat& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    FracMat e = m;
    std::vector<int> pivots = echelonize(R, e);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    PolyMat out(cols);
    for (auto& row : out) row.clear();
    std::vector<PolyVec> columns;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        FracVec v(cols, Frac{});
        v[free_c] = from_poly(Poly(1));
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fneg(R, e[r][free_c]);
        // clear denominators
        Poly lcm = Poly(1);
        for (const Frac& f : v)
            if (!f.is_zero()) lcm = R.divexact(R.mul(lcm, f.den), R.gcd(lcm, f.den));
        PolyVec col(cols);
        for (size_t i = 0; i < cols; ++i)
            col[i] = v[i].is_zero() ? Poly()
                                    : R.mul(v[i].num, R.divexact(lcm, v[i].den));
        columns.push_back(std::move(col));
    }
    // assemble cols x nullity
    PolyMat nm(cols, PolyVec(columns.size()));
    for (size_t k = 0; k < columns.size(); ++k)
        for (size_t i = 0; i < cols; ++i) nm[i][k] = columns[k][i];
    return nm;
}

Frac frac_det(const BaseRing& R, FracMat m) {
    size_t n = m.size();
    Frac det = from_poly(Poly(1));
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Frac{};
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = fneg(R, det);
        }
        det = fmul(R, det, m[c][c]);
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Frac f = fdiv(R, m[i][c], m[c][c]);
            for (size_t j = c; j < n; ++j)
                m[i][j] = fsub(R, m[i][j], fmul(R, f, m[c][j]));
        }
    }
    return det;
}

Poly common_denominator(const BaseRing& R, const FracMat& m) {
    Poly lcm = Poly(1);
    for (const auto& row : m)
        for (const Frac& f : row)
            if (!f.is_zero()) lcm = R.divexact(R.mul(lcm, f.den), R.gcd(lcm, f.den));
    return lcm;
}

FracMat frac_mul(const BaseRing& R, const FracMat& a, const FracMat& b) {
    size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    FracMat out(n, FracVec(mcols, Frac{}));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < mcols; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] = fadd(R, out[i][j], fmul(R, a[i][t], b[t][j]));
            }
        }
    return out;
}

}  // namespace pkorder
