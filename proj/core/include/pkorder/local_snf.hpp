#pragma once

#include "pkorder/frac.hpp"

namespace pkorder {

// Diagonal form of a matrix over the discrete valuation ring R_P.
// U * A * V = diag with U, V invertible over R_P (det a unit at P); the
// exponents are the positive valuations of the diagonal, ascending.
struct LocalSNF {
    Height1Prime prime;
    std::vector<long> exponents;
    int free_rank = 0;  // free rank of coker(rows of A in R^cols)
    FracMat U, V;
    FracMat diag;
};

// v_P of a reduced fraction (nullopt for zero is not used here; f != 0).
long frac_val(const BaseRing& R, const Frac& f, const Poly& gen);

LocalSNF local_snf(const BaseRing& R, const FracMat& a, int rows, int cols,
                   const Height1Prime& P);

// (free rank, torsion exponents) of coker(rels) localized at P.
std::pair<int, std::vector<long>> local_data(const BaseRing& R, const PolyMat& rels,
                                             int gens, const Height1Prime& P);

}  // namespace pkorder
