#pragma once

#include "types.hpp"

namespace weyldft {

// Immutable per-algebra tables.  All geometry is carried by the Cartan
// matrix, its inverse and the mark/comark vectors; no Euclidean
// realization of the simple roots is stored.
struct RootSystemData {
    AlgebraType type;
    int rank = 0;

    IntMat cartan;        // C_ij = <alpha_i, alpha_j-check>, n x n
    RatMat cartan_inv;    // exact C^-1
    IntVec marks;         // highest root = sum marks_i alpha_i
    IntVec comarks;       // highest dual root = sum comarks_i alpha_i-check

    std::vector<int> short_set;  // 1-based indices of short simple roots
    std::vector<int> long_set;   // empty for simply laced
    Int length_ratio = 1;        // |long|^2 / |short|^2 (1, 2 or 3)

    Int coxeter = 0;            // m = 1 + sum marks = 1 + sum comarks
    Int connection_index = 0;   // c = det C
    std::vector<int> unit_comark_indices;  // J = { i : comarks_i == 1 }
    Int weyl_order = 0;

    // Expansion of the highest root (resp. highest dual root) in the
    // basis of dual simple roots (resp. simple roots).  These drive the
    // affine reflections and the node-0 rows of the extended diagrams.
    IntVec affine_comarks;       // highest root in alpha-check basis
    IntVec dual_affine_comarks;  // highest dual root in alpha basis

    // Extended Cartan matrices, index 0 = affine node.  ext_cartan
    // extends C (point side), dual_ext_cartan extends C^T (weight side).
    IntMat ext_cartan;
    IntMat dual_ext_cartan;

    bool simply_laced() const { return long_set.empty(); }
    bool is_short(int i) const;  // 1-based; false for simply laced
};

RootSystemData build(AlgebraType t);

// rho^sigma as Kac-coordinate pattern [rho_0, rho_1, ..., rho_n].
IntVec rho_sigma(const RootSystemData& R, SignHom sigma);

// m^sigma = sum_i comarks_i * rho^sigma_i  (with comark 1 at index 0).
Int generalized_coxeter(const RootSystemData& R, SignHom sigma);

bool sign_admissible(const RootSystemData& R, SignHom sigma);
void require_admissible(const RootSystemData& R, SignHom sigma);

RatMat invert_rational(const IntMat& m);

}  // namespace weyldft
