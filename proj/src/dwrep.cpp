#include "dw/dwrep.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dw {

DWSpace dw_space(const Presentation& P, const FiniteGroup& G) {
    DWSpace S;
    S.pres = P;
    S.basis = classes(enumerate_homs(P, G), G);
    return S;
}

const std::vector<int>& PermutationRep::perm(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return perms[i];
    throw Error("no generator named " + name);
}

PermutationRep mcg_rep(const Presentation& P, const FiniteGroup& G,
                       const std::vector<NamedEndo>& generators) {
    DWSpace S = dw_space(P, G);
    PermutationRep rep;
    rep.dim = S.dim();
    // the trivial class is lexicographically first (all-identity tuple)
    int triv = 0;
    for (const auto& [name, e] : generators) {
        if (e.num_generators() != P.num_generators())
            throw Error("generator " + name + " has wrong arity");
        auto p = act(e, S.basis, G);
        if (!S.basis.empty() && p[triv] != triv)
            throw Error("generator " + name + " moves the trivial class");
        rep.names.push_back(name);
        rep.perms.push_back(std::move(p));
    }
    return rep;
}

namespace {

std::vector<int> pcompose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::set<std::vector<int>> close_group(const std::vector<std::vector<int>>& gens, int dim) {
    std::vector<int> id(dim);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                auto b = pcompose(g, a);
                if (seen.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

long long permutation_group_order(const std::vector<std::vector<int>>& gens, int dim) {
    return (long long)close_group(gens, dim).size();
}

bool permutation_groups_equal(const std::vector<std::vector<int>>& gens1,
                              const std::vector<std::vector<int>>& gens2, int dim) {
    return close_group(gens1, dim) == close_group(gens2, dim);
}

AssemblyMap assemble_dimension_reduction(const Presentation& P_Y, const FiniteGroup& G) {
    AssemblyMap A;
    Presentation P_prod = with_central_generator(P_Y);
    A.target = dw_space(P_prod, G);
    auto cc = conjugacy_classes(G);
    std::vector<char> hit(A.target.basis.size(), 0);
    bool ok = true;
    for (Elt g : cc.rep) {
        A.class_reps.push_back(g);
        Subgroup C = subgroup_as_group(G, centralizer(G, {g}));
        auto block = classes(enumerate_homs(P_Y, C.group), C.group);
        std::vector<int> to_target;
        for (const HomClass& c : block) {
            Hom lifted;
            for (Elt x : c.canonical.images) lifted.images.push_back(C.embed[x]);
            lifted.images.push_back(g);  // t -> g
            int idx = find_class(A.target.basis, canonical_form(G, lifted));
            if (idx < 0) throw Error("assembly: lifted class not found in target");
            if (hit[idx]) ok = false;  // collision across or within blocks
            hit[idx] = 1;
            to_target.push_back(idx);
            ++A.lhs_dim;
        }
        A.block_basis.push_back(std::move(block));
        A.block_to_target.push_back(std::move(to_target));
    }
    for (char c : hit)
        if (!c) ok = false;
    A.bijective = ok && (A.lhs_dim == A.target.dim());
    return A;
}

IntertwinerReport verify_intertwiner(const Presentation& P_Y, const FiniteGroup& G,
                                     const Endomorphism& f) {
    AssemblyMap A = assemble_dimension_reduction(P_Y, G);
    if (!A.bijective) throw Error("assembly map is not a bijection");
    IntertwinerReport rep;

    // RHS: (f x id) acting on the target basis
    Endomorphism f_ext = f;
    f_ext.images.push_back(Word::gen(P_Y.num_generators()));  // t -> t
    auto rhs = act(f_ext, A.target.basis, G);

    // LHS: block-diagonal f-action transported through the assembly bijection
    std::vector<int> lhs(A.target.dim(), -1);
    for (size_t b = 0; b < A.class_reps.size(); ++b) {
        Subgroup C = subgroup_as_group(G, centralizer(G, {A.class_reps[b]}));
        auto p = act(f, A.block_basis[b], C.group);  // throws if not bijective on the block
        for (size_t k = 0; k < p.size(); ++k)
            lhs[A.block_to_target[b][k]] = A.block_to_target[b][p[k]];
    }
    rep.ok = (lhs == rhs);
    rep.block_image_order = permutation_group_order({lhs}, A.target.dim());
    rep.target_image_order = permutation_group_order({rhs}, A.target.dim());
    return rep;
}

LabelCount count_labels(const Presentation& P_Sigma, const FiniteGroup& G) {
    LabelCount out;
    auto cls = classes(enumerate_homs(P_Sigma, G), G);
    for (const HomClass& c : cls) {
        auto cent = centralizer(G, c.canonical.images);
        Subgroup C = subgroup_as_group(G, cent);
        int irreps = (int)conjugacy_classes(C.group).classes.size();
        out.rows.push_back({c.canonical, (long long)cent.size(), irreps});
        out.total += irreps;
    }
    return out;
}

Presentation circle_presentation() {
    Presentation P;
    P.generator_names = {"a"};
    return P;
}

Presentation sphere_presentation() {
    return Presentation{};  // trivial fundamental group
}

Presentation torus_presentation(int d) {
    Presentation P;
    for (int i = 0; i < d; ++i) P.generator_names.push_back(std::string(1, char('a' + i)));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            P.relators.push_back(Word::from_powers({{i, 1}, {j, 1}, {i, -1}, {j, -1}}));
    return P;
}

Presentation with_central_generator(const Presentation& P, const std::string& name) {
    Presentation Q = P;
    int t = Q.num_generators();
    if (Q.index_of(name) >= 0) throw Error("central generator name already used");
    Q.generator_names.push_back(name);
    for (int i = 0; i < t; ++i)
        Q.relators.push_back(Word::from_powers({{t, 1}, {i, 1}, {t, -1}, {i, -1}}));
    return Q;
}

Endomorphism endo_from_matrix(const std::vector<std::vector<int>>& M) {
    Endomorphism e;
    int d = (int)M.size();
    for (int i = 0; i < d; ++i) {
        if ((int)M[i].size() != d) throw Error("endo_from_matrix: matrix not square");
        Word w;
        for (int j = 0; j < d; ++j) w = w * Word::gen(j, M[i][j]);
        e.images.push_back(std::move(w));
    }
    return e;
}

std::vector<NamedEndo> torus_ST_generators() {
    // S: a->b, b->a^-1 ; T: a->ab, b->b
    Endomorphism S{{Word::gen(1), Word::gen(0, -1)}};
    Endomorphism T{{Word::gen(0) * Word::gen(1), Word::gen(1)}};
    return {{"S", S}, {"T", T}};
}

std::vector<NamedEndo> t3_ST_generators() {
    return {{"S", endo_from_matrix(sl_embedding_matrix("S3"))},
            {"T", endo_from_matrix(sl_embedding_matrix("T3"))}};
}

std::vector<NamedEndo> circle_flip_generator() {
    return {{"flip", Endomorphism{{Word::gen(0, -1)}}}};
}

std::vector<std::vector<int>> sl_embedding_matrix(const std::string& which) {
    if (which == "T3" || which == "T21") return {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    if (which == "T22") return {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
    if (which == "T23") return {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    if (which == "S3") return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    if (which == "S21") return {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
    if (which == "S22") return {{0, 0, -1}, {0, 1, 0}, {1, 0, 0}};
    if (which == "S23") return {{1, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    throw Error("unknown embedding matrix " + which);
}

std::vector<std::vector<int>> mat_mul_int(const std::vector<std::vector<int>>& A,
                                          const std::vector<std::vector<int>>& B) {
    size_t n = A.size();
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

long long sl_order_mod(int d, int n) {
    if (n < 2) return 1;
    long long total = 1;
    for (int i = 0; i < d * d; ++i) total *= n;
    long long count = 0;
    std::vector<int> m(d * d);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = d * d - 1; i >= 0; --i) {
            m[i] = int(c % n);
            c /= n;
        }
        long long det;
        if (d == 2)
            det = (long long)m[0] * m[3] - (long long)m[1] * m[2];
        else
            det = (long long)m[0] * (m[4] * m[8] - m[5] * m[7]) -
                  (long long)m[1] * (m[3] * m[8] - m[5] * m[6]) +
                  (long long)m[2] * (m[3] * m[7] - m[4] * m[6]);
        if (((det % n) + n) % n == 1) ++count;
    }
    return count;
}

}  // namespace dw
