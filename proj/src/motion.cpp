#include "dw/motion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dw {

namespace {

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw Error("");
        } catch (...) {
            throw Error("malformed link spec parameter '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

LinkFamily LinkFamily::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("malformed link spec: " + spec);
    std::string head = spec.substr(0, colon);
    auto args = split_ints(spec.substr(colon + 1));
    LinkFamily L;
    if (head == "torus") {
        if (args.size() != 3) throw Error("torus link spec needs p,q,n");
        L.kind = Kind::Torus;
        L.p = args[0];
        L.q = args[1];
        L.n = args[2];
        if (L.p < 1 || L.q < 1 || L.n < 1 || gcd_int(L.p, L.q) != 1)
            throw Error("torus link needs coprime p,q >= 1 and n >= 1");
    } else if (head == "necklace" || head == "hopf") {
        if (args.size() != 1) throw Error(head + " link spec needs n");
        L.kind = head == "necklace" ? Kind::Necklace : Kind::Hopf;
        L.n = args[0];
        if (L.n < 1) throw Error("link needs n >= 1");
    } else {
        throw Error("unknown link family: " + head);
    }
    return L;
}

std::string LinkFamily::to_string() const {
    switch (kind) {
        case Kind::Torus:
            return "torus:" + std::to_string(p) + "," + std::to_string(q) + "," +
                   std::to_string(n);
        case Kind::Necklace:
            return "necklace:" + std::to_string(n);
        case Kind::Hopf:
            return "hopf:" + std::to_string(n);
    }
    return "";
}

int LinkFamily::components() const {
    return kind == Kind::Necklace ? n + 1 : n;
}

LinkData pi1(const LinkFamily& link) {
    LinkData L;
    int n = link.n;
    if (link.kind == LinkFamily::Kind::Torus) {
        // generators (y=u0, u1..u_{n-1}, x=un)
        L.pres.generator_names.push_back("y");
        for (int i = 1; i < n; ++i) L.pres.generator_names.push_back("u" + std::to_string(i));
        L.pres.generator_names.push_back("x");
        int x = n, y = 0;
        L.pres.relators.push_back(Word::gen(x, link.p) * Word::gen(y, -link.q));
        for (int i = 1; i < n; ++i) {
            Word yq = Word::gen(y, link.q);
            L.pres.relators.push_back(yq * Word::gen(i) * yq.inverse() * Word::gen(i, -1));
        }
        for (int i = 1; i <= n; ++i)
            L.boundary.push_back(
                {Word::gen(i - 1) * Word::gen(i, -1), Word::gen(x, link.p)});
    } else if (link.kind == LinkFamily::Kind::Necklace) {
        // generators (x, x1..xn); axis component listed last
        L.pres.generator_names.push_back("x");
        for (int i = 1; i <= n; ++i) L.pres.generator_names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i)
            L.pres.relators.push_back(
                Word::from_powers({{0, 1}, {i, 1}, {0, -1}, {i, -1}}));
        Word prod;
        for (int i = 1; i <= n; ++i) prod = prod * Word::gen(i);
        for (int i = 1; i <= n; ++i) L.boundary.push_back({Word::gen(i), Word::gen(0)});
        L.boundary.push_back({Word::gen(0), prod});  // the axis L_c
    } else {
        // generators (y, x1..xn)
        L.pres.generator_names.push_back("y");
        for (int i = 1; i <= n; ++i) L.pres.generator_names.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i)
            L.pres.relators.push_back(
                Word::from_powers({{0, 1}, {i, 1}, {0, -1}, {i, -1}}));
        for (int i = 1; i <= n; ++i) L.boundary.push_back({Word::gen(i), Word::gen(0)});
    }
    return L;
}

namespace {

Endomorphism identity_on(int ngens) { return Endomorphism::identity(ngens); }

// braid move on generator slots a, b (= a+1 in the slot order)
Endomorphism braid_endo(int ngens, int a, int b) {
    Endomorphism e = identity_on(ngens);
    e.images[a] = Word::gen(a) * Word::gen(b) * Word::gen(a, -1);
    e.images[b] = Word::gen(a);
    return e;
}

}  // namespace

std::vector<NamedEndo> motion_generators(const LinkFamily& link) {
    int n = link.n;
    std::vector<NamedEndo> out;
    if (link.kind == LinkFamily::Kind::Torus) {
        int ngens = n + 1;
        for (int i = 1; i < n; ++i) {
            Endomorphism e = identity_on(ngens);
            e.images[i] = Word::gen(i - 1) * Word::gen(i, -1) * Word::gen(i + 1);
            out.push_back({"s" + std::to_string(i), std::move(e)});
        }
        for (int i = 1; i <= n; ++i) {
            Word m = Word::gen(i - 1) * Word::gen(i, -1);
            Endomorphism e = identity_on(ngens);
            for (int j = i; j <= n; ++j) e.images[j] = m * Word::gen(j) * m.inverse();
            out.push_back({"r" + std::to_string(i), std::move(e)});
        }
    } else {
        // necklace and n-Hopf: braid moves on the meridians x1..xn plus the
        // cyclic rotation p (slot 0 is the axis meridian resp. y)
        int ngens = n + 1;
        for (int i = 1; i < n; ++i)
            out.push_back({"s" + std::to_string(i), braid_endo(ngens, i, i + 1)});
        Endomorphism rot = identity_on(ngens);
        for (int i = 1; i <= n; ++i) rot.images[i] = Word::gen(i == 1 ? n : i - 1);
        out.push_back({"p", std::move(rot)});
    }
    return out;
}

MotionRep motion_rep(const LinkFamily& link, const FiniteGroup& G, FluxLabel flux,
                     std::optional<FluxLabel> axis) {
    LinkData L = pi1(link);
    std::vector<LabelPair> labels(link.n, LabelPair{flux.g, flux.h});
    if (link.kind == LinkFamily::Kind::Necklace) {
        if (!axis) throw Error("necklace links need an axis label");
        labels.push_back({axis->g, axis->h});
    } else if (axis) {
        throw Error("axis label only applies to necklace links");
    }
    MotionRep R;
    R.space = labeled_space(L.pres, G, L.boundary, labels);
    R.rep.dim = R.space.dim();
    for (const auto& [name, e] : motion_generators(link)) {
        R.rep.names.push_back(name);
        R.rep.perms.push_back(act(e, R.space.basis, G));
    }
    return R;
}

MotionFamily motion_family(int p, int q) {
    if (p == 1 && q == 1) return MotionFamily::Hopf;
    return (p + q) % 2 == 1 ? MotionFamily::Odd : MotionFamily::Even;
}

MotionPresentation motion_presentation(MotionFamily fam, int n) {
    MotionPresentation mp;
    mp.family = fam;
    mp.n = n;
    using W = std::vector<std::pair<std::string, int>>;
    auto S = [](int i) { return "s" + std::to_string(i); };
    auto R = [](int i) { return "r" + std::to_string(i); };
    auto add = [&](const std::string& label, W w) { mp.relators.push_back({label, std::move(w)}); };
    for (int i = 1; i + 1 <= n - 1; ++i)
        add(S(i) + " " + S(i + 1) + " " + S(i) + " = " + S(i + 1) + " " + S(i) + " " + S(i + 1),
            {{S(i), 1}, {S(i + 1), 1}, {S(i), 1}, {S(i + 1), -1}, {S(i), -1}, {S(i + 1), -1}});
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add(S(i) + " " + S(j) + " commute", {{S(i), 1}, {S(j), 1}, {S(i), -1}, {S(j), -1}});
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            add(R(i) + " " + R(k) + " commute", {{R(i), 1}, {R(k), 1}, {R(i), -1}, {R(k), -1}});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n - 1; ++j) {
            if (j == i - 1) continue;
            add(R(i) + " " + S(j) + " commute", {{R(i), 1}, {S(j), 1}, {R(i), -1}, {S(j), -1}});
        }
    W prod;
    for (int i = 1; i <= n; ++i) prod.push_back({R(i), 1});
    add("r1..rn = 1", prod);
    if (fam == MotionFamily::Even) {
        W twice = prod;
        twice.insert(twice.end(), prod.begin(), prod.end());
        add("r_2pi^2 = 1", twice);
    }
    if (fam == MotionFamily::Hopf) {
        add("r1 = 1", {{R(1), 1}});
        add("rn = 1", {{R(n), 1}});
    }
    return mp;
}

namespace {

std::vector<int> perm_identity(int dim) {
    std::vector<int> p(dim);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::vector<int> perm_inv(const std::vector<int>& a) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = (int)i;
    return c;
}

}  // namespace

RelationReport verify_motion_relations(const PermutationRep& rep, const MotionPresentation& mp) {
    RelationReport out;
    auto id = perm_identity(rep.dim);
    for (const auto& [label, word] : mp.relators) {
        std::vector<int> acc = id;
        for (const auto& [name, exp] : word) {
            const auto& p = rep.perm(name);
            acc = perm_mul(acc, exp > 0 ? p : perm_inv(p));
        }
        bool ok = (acc == id);
        out.results.push_back({label, ok});
        out.all_ok = out.all_ok && ok;
    }
    return out;
}

namespace {

struct TorusLabeled {
    LinkData link;
    LabeledSpace space;
    ConjugacyClassTable cc;
    std::vector<std::pair<Elt, Elt>> block_key;  // per basis class: ([x] rep, [y] rep)
};

TorusLabeled torus_labeled(const FiniteGroup& G, int p, int q, int n, FluxLabel flux) {
    LinkFamily L{LinkFamily::Kind::Torus, p, q, n};
    TorusLabeled T;
    T.link = pi1(L);
    T.space = labeled_space(T.link.pres, G, T.link.boundary,
                            std::vector<LabelPair>(n, LabelPair{flux.g, flux.h}));
    T.cc = conjugacy_classes(G);
    for (const auto& c : T.space.basis) {
        Elt x = c.canonical.images.back(), y = c.canonical.images.front();
        T.block_key.push_back({T.cc.rep[T.cc.class_of[x]], T.cc.rep[T.cc.class_of[y]]});
    }
    return T;
}

// minimal paper-direction witness: m = a g a^{-1} and l = a h a^{-1}
Elt paper_witness(const FiniteGroup& G, Elt m, Elt l, Elt g, Elt h, Elt start = 0) {
    for (Elt a = start; a < G.order(); ++a)
        if (G.conj(a, g) == m && G.conj(a, h) == l) return a;
    return -1;
}

}  // namespace

std::vector<std::pair<Elt, Elt>> nonempty_blocks(const FiniteGroup& G, int p, int q, int n,
                                                 FluxLabel flux) {
    auto T = torus_labeled(G, p, q, n, flux);
    std::set<std::pair<Elt, Elt>> keys(T.block_key.begin(), T.block_key.end());
    return {keys.begin(), keys.end()};
}

PsiBlockReport psi_bijection(const FiniteGroup& G, int p, int q, int n, FluxLabel flux,
                             std::pair<Elt, Elt> block, int base_choice) {
    auto T = torus_labeled(G, p, q, n, flux);
    PsiBlockReport rep;
    rep.class_x = block.first;
    rep.class_y = block.second;

    std::vector<int> members;  // indices into T.space.basis
    for (int k = 0; k < T.space.dim(); ++k)
        if (T.block_key[k] == block) members.push_back(k);
    if (members.empty()) throw Error("empty block");
    rep.s_dim = (int)members.size();

    // base tuple: (hom, paper witnesses), lexicographically minimal; base_choice
    // steps to the next witness vector (or the next class) for the independence
    // spot check
    struct Base {
        Hom hom;
        std::vector<Elt> wit;
    };
    auto base_for = [&](const Hom& h0, Elt wit_start_last) -> std::optional<Base> {
        std::vector<Elt> wit;
        for (int i = 1; i <= n; ++i) {
            Elt m = G.mul(h0.images[i - 1], G.inv(h0.images[i]));
            Elt l = G.power(h0.images[n], p);
            Elt a = paper_witness(G, m, l, flux.g, flux.h, i == n ? wit_start_last : 0);
            if (a < 0) return std::nullopt;
            wit.push_back(a);
        }
        return Base{h0, std::move(wit)};
    };
    std::vector<Base> candidates;
    for (int k : members) {
        if (auto b = base_for(T.space.basis[k].canonical, 0)) candidates.push_back(std::move(*b));
        if ((int)candidates.size() > base_choice) break;
    }
    if ((int)candidates.size() <= base_choice) {
        // single-class block: step to the next witness vector instead
        if (auto b = base_for(candidates.at(0).hom, candidates[0].wit[n - 1] + 1))
            candidates.push_back(std::move(*b));
    }
    const Base& base = candidates[std::min<size_t>(base_choice, candidates.size() - 1)];
    Elt y0 = base.hom.images[0], x0 = base.hom.images[n];
    Elt y0q = G.power(y0, q);

    Subgroup H = subgroup_as_group(G, centralizer(G, {y0q}));
    std::vector<int> to_H(G.order(), -1);
    for (int i = 0; i < (int)H.embed.size(); ++i) to_H[H.embed[i]] = i;
    auto in_H = [&](Elt g) { return to_H[g] >= 0; };

    // cylinder-side labels: base meridians, x0 and y0; all lie in C_G(y0^q)
    std::vector<Elt> gtilde;
    for (int i = 1; i <= n; ++i)
        gtilde.push_back(G.mul(base.hom.images[i - 1], G.inv(base.hom.images[i])));
    for (Elt e : gtilde)
        if (!in_H(e)) throw Error("psi: meridian label escapes the centralizer");
    if (!in_H(x0) || !in_H(y0)) throw Error("psi: boundary label escapes the centralizer");

    const FiniteGroup& Hg = H.group;
    int y0H = to_H[y0], x0H = to_H[x0];
    std::vector<int> gtH;
    for (Elt e : gtilde) gtH.push_back(to_H[e]);

    // F side: tuples (ytil, u1.., xtil) over H with conjugacy witness conditions
    double states = std::pow((double)Hg.order(), n + 1);
    if (states > double(1 << 24)) throw Error("psi enumeration exceeds the desk-scale cap");
    auto conj_class_has = [&](const FiniteGroup& K, Elt target, Elt x) {
        for (Elt c = 0; c < K.order(); ++c)
            if (K.conj(c, target) == x) return true;
        return false;
    };
    std::vector<Hom> fside;
    std::vector<Elt> tup(n + 1, 0);
    for (;;) {
        bool ok = conj_class_has(Hg, y0H, tup[0]) && conj_class_has(Hg, x0H, tup[n]);
        for (int i = 1; i <= n && ok; ++i) {
            Elt m = Hg.mul(tup[i - 1], Hg.inv(tup[i]));
            ok = conj_class_has(Hg, gtH[i - 1], m);
        }
        if (ok) fside.push_back(Hom{tup});
        int pos = n;
        while (pos >= 0 && ++tup[pos] == Hg.order()) tup[pos--] = 0;
        if (pos < 0) break;
    }
    auto fclasses = classes(fside, Hg);
    rep.f_dim = (int)fclasses.size();

    // Psi: normalize y to y0, reinterpret over H, canonicalize; well-definedness
    // checks every normalizing conjugator
    std::vector<int> image_of;  // per member: f-class index
    rep.well_defined = true;
    for (int k : members) {
        const Hom& h = T.space.basis[k].canonical;
        std::set<int> targets;
        for (Elt c = 0; c < G.order(); ++c) {
            if (G.conj(c, h.images[0]) != y0) continue;
            Hom t = conjugate_hom(G, c, h);
            Hom tH;
            for (Elt e : t.images) {
                if (!in_H(e)) throw Error("psi: normalized tuple escapes the centralizer");
                tH.images.push_back(to_H[e]);
            }
            int idx = find_class(fclasses, canonical_form(Hg, tH));
            if (idx < 0) throw Error("psi: image not found on the cylinder side");
            targets.insert(idx);
        }
        if (targets.size() != 1) rep.well_defined = false;
        image_of.push_back(*targets.begin());
    }
    std::set<int> image_set(image_of.begin(), image_of.end());
    rep.injective = image_set.size() == image_of.size();
    rep.surjective = (int)image_set.size() == rep.f_dim;

    // naturality: transported motion action equals the cylinder-side action
    LinkFamily L{LinkFamily::Kind::Torus, p, q, n};
    std::map<int, int> member_pos;
    for (size_t i = 0; i < members.size(); ++i) member_pos[members[i]] = (int)i;
    for (const auto& [name, e] : motion_generators(L)) {
        auto pS = act(e, T.space.basis, G);
        for (int k : members)
            if (T.block_key[pS[k]] != block) throw Error("motion generator leaves the block");
        auto pF = act(e, fclasses, Hg);
        for (int k : members) {
            int lhs = image_of[member_pos[pS[k]]];
            int rhs = pF[image_of[member_pos[k]]];
            if (lhs != rhs) rep.natural = false;
        }
    }
    return rep;
}

Thm2Report thm2_decomposition(const FiniteGroup& G, int p, int q, int n, FluxLabel flux,
                              int base_choice) {
    Thm2Report out;
    for (out.v = 1;; ++out.v) {
        long long t = (long long)p * out.v - 1;
        if (t > 0 && t % q == 0) {
            out.u = int(t / q);
            break;
        }
        if (out.v > 4 * q + 4) throw Error("no small solution of p*v - q*u = 1");
    }
    auto T = torus_labeled(G, p, q, n, flux);
    out.lhs_dim = T.space.dim();
    for (auto key : nonempty_blocks(G, p, q, n, flux)) {
        auto rep = psi_bijection(G, p, q, n, flux, key, base_choice);
        out.rhs_total += rep.f_dim;
        out.blocks.push_back(rep);
    }
    out.ok = (out.lhs_dim == out.rhs_total);
    for (const auto& b : out.blocks) out.ok = out.ok && b.ok();
    return out;
}

NecklaceReport necklace_T_check(const FiniteGroup& G, int n, Elt g, Elt g_c, Elt h_c) {
    if (!G.commutes(g, g_c)) throw Error("necklace labels need [g, g_c] = 1");
    if (!G.commutes(g_c, h_c)) throw Error("necklace labels need [g_c, h_c] = 1");
    LinkFamily L{LinkFamily::Kind::Necklace, 1, 1, n};
    LinkData link = pi1(L);
    std::vector<LabelPair> labels(n, LabelPair{g, g_c});
    labels.push_back({g_c, h_c});
    LabeledSpace B = labeled_space(link.pres, G, link.boundary, labels);
    NecklaceReport rep;
    rep.dim_link = B.dim();
    if (B.dim() == 0) {
        rep.bijection = rep.squares_commute = rep.images_equal = true;
        rep.dim_disk = 0;
        return rep;
    }

    // normalize the minimal class to x = g_c; gamma is its first puncture image
    auto normalize = [&](const Hom& h) {
        Hom best;
        bool have = false;
        for (Elt c = 0; c < G.order(); ++c) {
            if (G.conj(c, h.images[0]) != g_c) continue;
            Hom t = conjugate_hom(G, c, h);
            if (!have || t < best) {
                best = std::move(t);
                have = true;
            }
        }
        if (!have) throw Error("necklace: class has no representative with x = g_c");
        return best;
    };
    Hom base = normalize(B.basis[0].canonical);
    Elt gamma = base.images[1];

    Subgroup H = subgroup_as_group(G, centralizer(G, {g_c}));
    std::vector<int> to_H(G.order(), -1);
    for (int i = 0; i < (int)H.embed.size(); ++i) to_H[H.embed[i]] = i;
    const FiniteGroup& Hg = H.group;
    if (to_H[gamma] < 0 || to_H[h_c] < 0) throw Error("necklace: disk labels escape C(g_c)");
    int gammaH = to_H[gamma], hcH = to_H[h_c];

    // disk side: (x1..xn) over H, each ~ gamma, product ~ h_c
    double states = std::pow((double)Hg.order(), n);
    if (states > double(1 << 24)) throw Error("necklace enumeration exceeds the desk-scale cap");
    auto conj_class_has = [&](Elt target, Elt x) {
        for (Elt c = 0; c < Hg.order(); ++c)
            if (Hg.conj(c, target) == x) return true;
        return false;
    };
    std::vector<Hom> dside;
    std::vector<Elt> tup(n, 0);
    for (;;) {
        bool ok = true;
        Elt prod = FiniteGroup::id;
        for (int i = 0; i < n && ok; ++i) {
            ok = conj_class_has(gammaH, tup[i]);
            prod = Hg.mul(prod, tup[i]);
        }
        ok = ok && conj_class_has(hcH, prod);
        if (ok) dside.push_back(Hom{tup});
        int pos = n - 1;
        while (pos >= 0 && ++tup[pos] == Hg.order()) tup[pos--] = 0;
        if (pos < 0) break;
    }
    auto dclasses = classes(dside, Hg);
    rep.dim_disk = (int)dclasses.size();

    // T: prepend g_c and canonicalize in G
    std::vector<int> TofD(dclasses.size());
    std::vector<char> hit(B.dim(), 0);
    bool bij = rep.dim_disk == rep.dim_link;
    for (size_t k = 0; k < dclasses.size(); ++k) {
        Hom amb;
        amb.images.push_back(g_c);
        for (Elt e : dclasses[k].canonical.images) amb.images.push_back(H.embed[e]);
        int idx = find_class(B.basis, canonical_form(G, amb));
        if (idx < 0) {
            bij = false;
            break;
        }
        TofD[k] = idx;
        if (hit[idx]) bij = false;
        hit[idx] = 1;
    }
    if (bij)
        for (char c : hit) bij = bij && (c != 0);
    rep.bijection = bij;
    if (!bij) return rep;

    std::vector<int> TinvOfB(B.dim());
    for (size_t k = 0; k < TofD.size(); ++k) TinvOfB[TofD[k]] = (int)k;

    // braid squares and image comparison
    auto gens = motion_generators(L);
    std::vector<std::vector<int>> motion_perms, transported;
    rep.squares_commute = true;
    for (const auto& [name, e] : gens) {
        auto pB = act(e, B.basis, G);
        motion_perms.push_back(pB);
        if (name == "p") continue;  // the rotation is motion-side only
        // disk-side endo: same braid formulas on slots 1..n with a dummy slot 0
        Endomorphism d = Endomorphism::identity(n);
        int i = std::stoi(name.substr(1));
        d.images[i - 1] = Word::gen(i - 1) * Word::gen(i) * Word::gen(i - 1, -1);
        d.images[i] = Word::gen(i - 1);
        auto pD = act(d, dclasses, Hg);
        std::vector<int> tr(B.dim());
        for (int b = 0; b < B.dim(); ++b) tr[b] = TofD[pD[TinvOfB[b]]];
        transported.push_back(tr);
        if (tr != pB) rep.squares_commute = false;
    }
    rep.images_equal = permutation_groups_equal(motion_perms, transported, B.dim());
    return rep;
}

}  // namespace dw
