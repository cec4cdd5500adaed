#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dw/dwrep.hpp"
#include "dw/group.hpp"
#include "dw/hom.hpp"
#include "dw/word.hpp"

namespace dw {

struct LinkFamily {
    enum class Kind { Torus, Necklace, Hopf };
    Kind kind;
    int p = 1, q = 1, n = 1;

    /// Parses torus:p,q,n | necklace:n | hopf:n.
    static LinkFamily parse(const std::string& spec);
    std::string to_string() const;
    int components() const;
};

struct LinkData {
    Presentation pres;
    std::vector<BoundaryComponent> boundary;  // one per link component
};

/// Fundamental-group presentation with meridian/longitude words per component.
/// Torus links use generators (y=u0, u1..u_{n-1}, x=un); the necklace appends
/// the axis component last.
LinkData pi1(const LinkFamily& link);

std::vector<NamedEndo> motion_generators(const LinkFamily& link);

struct FluxLabel {
    Elt g, h;
};

struct MotionRep {
    LabeledSpace space;
    PermutationRep rep;
};

/// Permutation action of the motion generators on the pure-flux labeled basis.
/// Necklace links need the axis label; its components carry (g, g_c) after the
/// nonvanishing relabeling.
MotionRep motion_rep(const LinkFamily& link, const FiniteGroup& G, FluxLabel flux,
                     std::optional<FluxLabel> axis = std::nullopt);

enum class MotionFamily { Odd, Even, Hopf };
MotionFamily motion_family(int p, int q);

struct MotionPresentation {
    MotionFamily family;
    int n = 1;
    // relators as words over named generators s1..s_{n-1}, r1..rn; the even
    // family's r_2pi is expanded to r1..rn before evaluation
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, int>>>> relators;
};

MotionPresentation motion_presentation(MotionFamily fam, int n);

struct RelationReport {
    bool all_ok = true;
    std::vector<std::pair<std::string, bool>> results;
};

/// Evaluates every relator of the motion presentation as a permutation product.
RelationReport verify_motion_relations(const PermutationRep& rep, const MotionPresentation& mp);

struct PsiBlockReport {
    Elt class_x = -1, class_y = -1;  // class representatives in G
    int s_dim = 0, f_dim = 0;
    bool well_defined = false, injective = false, surjective = false;
    bool natural = true;  // motion action transported through Psi matches the
                          // cylinder-side action computed over C_G(y0^q)
    bool ok() const {
        return well_defined && injective && surjective && natural && s_dim == f_dim;
    }
};

/// Verifies the block bijection Psi_{[x],[y]} by double enumeration.
/// base_choice 0 picks the minimal base tuple, 1 the second-minimal.
PsiBlockReport psi_bijection(const FiniteGroup& G, int p, int q, int n, FluxLabel flux,
                             std::pair<Elt, Elt> block, int base_choice = 0);

/// All nonempty blocks of the labeled space, keyed by ([x],[y]) class reps.
std::vector<std::pair<Elt, Elt>> nonempty_blocks(const FiniteGroup& G, int p, int q, int n,
                                                 FluxLabel flux);

struct Thm2Report {
    int lhs_dim = 0;
    int rhs_total = 0;
    int u = 0, v = 0;  // minimal positive solution of p*v - q*u = 1
    std::vector<PsiBlockReport> blocks;
    bool ok = false;
};

Thm2Report thm2_decomposition(const FiniteGroup& G, int p, int q, int n, FluxLabel flux,
                              int base_choice = 0);

struct NecklaceReport {
    int dim_link = 0, dim_disk = 0;
    bool bijection = false;
    bool squares_commute = false;  // T . braid = braid . T per generator, element-wise
    bool images_equal = false;     // transported braid image = full motion image
    bool ok() const { return bijection && squares_commute && images_equal; }
};

/// The necklace commuting-diagram check: labels (g, g_c) on the components and
/// (g_c, h_c) on the axis; requires [g,g_c] = [g_c,h_c] = 1.
NecklaceReport necklace_T_check(const FiniteGroup& G, int n, Elt g, Elt g_c, Elt h_c);

}  // namespace dw
