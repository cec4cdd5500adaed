#pragma once

#include <string>
#include <vector>

#include "dw/group.hpp"
#include "dw/hom.hpp"
#include "dw/word.hpp"

namespace dw {

struct DWSpace {
    Presentation pres;
    std::vector<HomClass> basis;
    int dim() const { return (int)basis.size(); }
};

DWSpace dw_space(const Presentation& P, const FiniteGroup& G);

struct NamedEndo {
    std::string name;
    Endomorphism endo;
};

struct PermutationRep {
    std::vector<std::string> names;
    std::vector<std::vector<int>> perms;
    int dim = 0;
    const std::vector<int>& perm(const std::string& name) const;
};

/// Mapping-class action by precomposition inverse on the hom-class basis.
/// The trivial class must come out fixed by every generator.
PermutationRep mcg_rep(const Presentation& P, const FiniteGroup& G,
                       const std::vector<NamedEndo>& generators);

/// Size of the permutation group generated by the rep's images.
long long permutation_group_order(const std::vector<std::vector<int>>& gens, int dim);
bool permutation_groups_equal(const std::vector<std::vector<int>>& gens1,
                              const std::vector<std::vector<int>>& gens2, int dim);

struct AssemblyMap {
    std::vector<Elt> class_reps;                  // one g per conjugacy class of G
    std::vector<std::vector<HomClass>> block_basis;  // classes of Hom(P_Y, C_G(g))
    std::vector<std::vector<int>> block_to_target;   // -> indices into target basis
    DWSpace target;                               // V_G(Y x S^1)
    int lhs_dim = 0;
    bool bijective = false;
};

/// Thm-1 assembly: blocks Hom(P_Y, C_G(g))/~ glued onto Hom(P_Y x Z, G)/~ by
/// appending t -> g; verifies the result is a bijection.
AssemblyMap assemble_dimension_reduction(const Presentation& P_Y, const FiniteGroup& G);

struct IntertwinerReport {
    bool ok = false;
    long long block_image_order = 0;   // order of the assembled block-diagonal action
    long long target_image_order = 0;  // order of the (f x id) action
};

/// Checks rho_as(+f_* v) = (f x id)_* rho_as(+v) at the permutation level.
IntertwinerReport verify_intertwiner(const Presentation& P_Y, const FiniteGroup& G,
                                     const Endomorphism& f);

struct LabelCountRow {
    Hom class_rep;
    long long centralizer_order = 0;
    int irreps = 0;  // = #conjugacy classes of the centralizer
};

struct LabelCount {
    long long total = 0;
    std::vector<LabelCountRow> rows;
};

/// Number of (rho, alpha) label types: sum over hom classes of the number of
/// irreducibles of the image centralizer (counted as its conjugacy classes).
LabelCount count_labels(const Presentation& P_Sigma, const FiniteGroup& G);

// Standard presentations and mapping-class generators.
Presentation circle_presentation();
Presentation sphere_presentation();
Presentation torus_presentation(int d);  // T^d: d generators, pairwise commutators
Presentation with_central_generator(const Presentation& P, const std::string& name = "t");

/// Endomorphism of T^d from an integer matrix: generator i -> prod_j g_j^(M[i][j]).
Endomorphism endo_from_matrix(const std::vector<std::vector<int>>& M);

std::vector<NamedEndo> torus_ST_generators();    // S, T on T^2
std::vector<NamedEndo> t3_ST_generators();       // S3, T3 on T^3
std::vector<NamedEndo> circle_flip_generator();  // a -> a^-1

// Integer 3x3 helpers for the T3 = T21, S3 = S21*S23 identities.
std::vector<std::vector<int>> sl_embedding_matrix(const std::string& which);
std::vector<std::vector<int>> mat_mul_int(const std::vector<std::vector<int>>& A,
                                          const std::vector<std::vector<int>>& B);

/// |SL(d, Z_n)| by direct matrix enumeration (the order oracle).
long long sl_order_mod(int d, int n);

}  // namespace dw
