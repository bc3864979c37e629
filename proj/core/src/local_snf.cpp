#include "pkorder/local_snf.hpp"

#include <algorithm>

namespace pkorder {

long frac_val(const BaseRing& R, const Frac& f, const Poly& gen) {
    // reduced fraction: at most one of num, den carries the prime
    return val_base(R, f.num, gen) - val_base(R, f.den, gen);
}

LocalSNF local_snf(const BaseRing& R, const FracMat& a, int rows, int cols,
                   const Height1Prime& P) {
    LocalSNF out;
    out.prime = P;
    FracMat m = a;
    m.resize(rows);
    for (auto& row : m) row.resize(cols, Frac{});

    auto ident = [](int n) {
        FracMat e(n, FracVec(n, Frac{}));
        for (int i = 0; i < n; ++i) e[i][i] = from_poly(Poly(1));
        return e;
    };
    out.U = ident(rows);
    out.V = ident(cols);

    int pivots = 0;
    const int lim = std::min(rows, cols);
    for (int k = 0; k < lim; ++k) {
        // entry of minimal valuation in the trailing block
        int bi = -1, bj = -1;
        long bv = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (m[i][j].is_zero()) continue;
                long v = frac_val(R, m[i][j], P.gen);
                if (bi < 0 || v < bv) {
                    bi = i;
                    bj = j;
                    bv = v;
                }
            }
        if (bi < 0) break;
        if (bi != k) {
            std::swap(m[bi], m[k]);
            std::swap(out.U[bi], out.U[k]);
        }
        if (bj != k) {
            for (int i = 0; i < rows; ++i) std::swap(m[i][bj], m[i][k]);
            for (int i = 0; i < cols; ++i) std::swap(out.V[i][bj], out.V[i][k]);
        }
        const Frac piv = m[k][k];
        for (int i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            Frac q = fdiv(R, m[i][k], piv);
            for (int j = k; j < cols; ++j)
                m[i][j] = fsub(R, m[i][j], fmul(R, q, m[k][j]));
            for (int j = 0; j < rows; ++j)
                out.U[i][j] = fsub(R, out.U[i][j], fmul(R, q, out.U[k][j]));
        }
        for (int j = k + 1; j < cols; ++j) {
            if (m[k][j].is_zero()) continue;
            Frac q = fdiv(R, m[k][j], piv);
            for (int i = k; i < rows; ++i)
                m[i][j] = fsub(R, m[i][j], fmul(R, q, m[i][k]));
            for (int i = 0; i < cols; ++i)
                out.V[i][j] = fsub(R, out.V[i][j], fmul(R, q, out.V[i][k]));
        }
        ++pivots;
        long v = frac_val(R, piv, P.gen);
        if (v > 0) out.exponents.push_back(v);
    }
    out.free_rank = cols - pivots;
    std::sort(out.exponents.begin(), out.exponents.end());
    out.diag = std::move(m);
    return out;
}

std::pair<int, std::vector<long>> local_data(const BaseRing& R, const PolyMat& rels,
                                             int gens, const Height1Prime& P) {
    LocalSNF s = local_snf(R, to_frac_mat(rels), static_cast<int>(rels.size()), gens, P);
    return {s.free_rank, s.exponents};
}

}  // namespace pkorder
