#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dw/group.hpp"

namespace dw {

/// A conjugacy-class representative of SL(d,p) with its family tag and
/// parameters (Humphreys' names for d=2, Simpson-Frame C1..C8 for d=3).
struct ClassPoint {
    std::string tag;
    std::vector<int> params;
    std::vector<int> mat;  // d*d row-major over Z_p
    int d = 2, p = 2;
};

/// Class representatives, degenerate small-p families omitted.
std::vector<ClassPoint> sl_class_points(int d, int p);

/// p^(dim ker(M - I)) -- the number of vectors in Z_p^d fixed by M.
long long permutation_character(int d, int p, const std::vector<int>& mat);

/// Character-table right-hand sides for the decomposition identities.
std::complex<double> table1_rhs(int p, const ClassPoint& cp);
std::complex<double> table2_rhs(int p, const ClassPoint& cp);

struct CharRow {
    ClassPoint point;
    long long lhs = 0;
    std::complex<double> rhs;
    double residual = 0;
};

struct CharReport {
    bool ok = false;
    double max_residual = 0;
    int class_count = 0;
    int expected_classes = 0;
    bool coverage_ok = false;   // orbit union of the representatives = SL(d,p)
    long long group_order = 0;
    std::vector<CharRow> rows;
};

/// Evaluates LHS (fixed-point count) against the table RHS on every class.
/// Supported (d,p): (2,2),(2,3),(2,5),(3,2),(3,3).
CharReport verify_character_identity(int d, int p);

/// Burnside cross-check: (1/|G|) sum chi(g)^2 == #orbits of SL(2,p) on
/// Z_p^2 x Z_p^2, both computed exhaustively.
bool character_norm_matches_orbit_count(int p);

}  // namespace dw
