#pragma once

#include <optional>
#include <vector>

#include "dw/group.hpp"
#include "dw/word.hpp"

namespace dw {

/// A homomorphism P -> G as the tuple of generator images.
struct Hom {
    std::vector<Elt> images;
    bool operator==(const Hom&) const = default;
    auto operator<=>(const Hom&) const = default;
};

Elt evaluate(const FiniteGroup& G, const Hom& h, const Word& w);
bool satisfies_relators(const Presentation& P, const FiniteGroup& G, const Hom& h);

/// All relator-satisfying image tuples in lexicographic order. `threads` = 0
/// reads DWM_THREADS (default: hardware concurrency); the search partitions on
/// the first generator image and merges deterministically.
std::vector<Hom> enumerate_homs(const Presentation& P, const FiniteGroup& G, int threads = 0);

struct HomClass {
    Hom canonical;   // lexicographically minimal image tuple in the orbit
    int orbit_size;
};

Hom conjugate_hom(const FiniteGroup& G, Elt g, const Hom& h);
Hom canonical_form(const FiniteGroup& G, const Hom& h);

/// Conjugation orbits of a conjugation-closed hom list; ordered by canonical form.
std::vector<HomClass> classes(const std::vector<Hom>& homs, const FiniteGroup& G);

/// Permutation sending [phi] to [phi o e^{-1}] (the mapping-class convention):
/// computed as precomposition followed by inversion, with a bijectivity check.
/// Throws when e does not induce a bijection on these classes.
std::vector<int> act(const Endomorphism& e, const std::vector<HomClass>& cls,
                     const FiniteGroup& G);

/// Plain precomposition [phi] -> [phi o e], same bijectivity check.
std::vector<int> act_pre(const Endomorphism& e, const std::vector<HomClass>& cls,
                         const FiniteGroup& G);

int find_class(const std::vector<HomClass>& cls, const Hom& canonical);

struct BoundaryComponent {
    Word meridian, longitude;
};

struct LabelPair {
    Elt g, h;
};

struct LabeledBasisVector {
    Hom rho;
    std::vector<Elt> witnesses;  // a_i per boundary component: a_i rho(m_i) a_i^{-1} = g_i
};

struct LabeledSpace {
    std::vector<HomClass> basis;           // classes of label-compatible homs
    std::vector<LabeledBasisVector> reps;  // one witnessed representative per class
    int dim() const { return (int)basis.size(); }
};

/// Basis of hom classes meeting the pure-flux boundary conditions
/// a_i rho(m_i) a_i^{-1} = g_i, a_i rho(l_i) a_i^{-1} = h_i (one a_i per
/// component). Throws on a non-commuting label pair.
LabeledSpace labeled_space(const Presentation& P, const FiniteGroup& G,
                           const std::vector<BoundaryComponent>& boundary,
                           const std::vector<LabelPair>& labels);

/// Worker cap: DWM_THREADS if set, else hardware concurrency.
int worker_count();

}  // namespace dw
