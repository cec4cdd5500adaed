#include "dw/hom.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace dw {

Elt evaluate(const FiniteGroup& G, const Hom& h, const Word& w) {
    Elt r = FiniteGroup::id;
    for (const Letter& l : w.letters()) {
        if (l.gen >= (int)h.images.size()) throw Error("evaluate: generator out of range");
        Elt x = h.images[l.gen];
        r = G.mul(r, l.exp > 0 ? x : G.inv(x));
    }
    return r;
}

bool satisfies_relators(const Presentation& P, const FiniteGroup& G, const Hom& h) {
    for (const Word& r : P.relators)
        if (evaluate(G, h, r) != FiniteGroup::id) return false;
    return true;
}

int worker_count() {
    if (const char* env = std::getenv("DWM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

namespace {

// Relators become checkable once all their generators are assigned; index them
// by the largest generator they mention so the DFS prunes as early as possible.
std::vector<std::vector<const Word*>> relators_by_depth(const Presentation& P) {
    std::vector<std::vector<const Word*>> by_depth(P.num_generators() + 1);
    for (const Word& r : P.relators) {
        int m = r.max_generator();
        by_depth[m < 0 ? 0 : m + 1].push_back(&r);
    }
    return by_depth;
}

void dfs_assign(const Presentation& P, const FiniteGroup& G,
                const std::vector<std::vector<const Word*>>& by_depth, Hom& partial, int depth,
                std::vector<Hom>& out) {
    int n = P.num_generators();
    if (depth == n) {
        out.push_back(partial);
        return;
    }
    for (Elt g = 0; g < G.order(); ++g) {
        partial.images[depth] = g;
        bool ok = true;
        for (const Word* r : by_depth[depth + 1])
            if (evaluate(G, partial, *r) != FiniteGroup::id) {
                ok = false;
                break;
            }
        if (ok) dfs_assign(P, G, by_depth, partial, depth + 1, out);
    }
}

}  // namespace

std::vector<Hom> enumerate_homs(const Presentation& P, const FiniteGroup& G, int threads) {
    P.check();
    int n = P.num_generators();
    auto by_depth = relators_by_depth(P);
    if (n == 0) return {Hom{}};

    if (threads <= 0) threads = worker_count();
    std::vector<Hom> out;
    if (threads <= 1 || n < 2 || G.order() < 8) {
        Hom partial{std::vector<Elt>(n, 0)};
        // re-run the depth-1 check inline (by_depth[1] relators see only gen 0)
        for (Elt g0 = 0; g0 < G.order(); ++g0) {
            partial.images[0] = g0;
            bool ok = true;
            for (const Word* r : by_depth[1])
                if (evaluate(G, partial, *r) != FiniteGroup::id) {
                    ok = false;
                    break;
                }
            if (ok) dfs_assign(P, G, by_depth, partial, 1, out);
        }
        return out;
    }

    // partition on the first generator image; merge branch results in order
    std::vector<std::vector<Hom>> branch(G.order());
    std::vector<std::thread> pool;
    std::atomic_int next{0};
    int nw = std::min(threads, G.order());
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int g0 = next.fetch_add(1);
                if (g0 >= G.order()) break;
                Hom partial{std::vector<Elt>(n, 0)};
                partial.images[0] = g0;
                bool ok = true;
                for (const Word* r : by_depth[1])
                    if (evaluate(G, partial, *r) != FiniteGroup::id) {
                        ok = false;
                        break;
                    }
                if (ok) dfs_assign(P, G, by_depth, partial, 1, branch[g0]);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& b : branch) out.insert(out.end(), b.begin(), b.end());
    return out;
}

Hom conjugate_hom(const FiniteGroup& G, Elt g, const Hom& h) {
    Hom out;
    out.images.reserve(h.images.size());
    for (Elt x : h.images) out.images.push_back(G.conj(g, x));
    return out;
}

Hom canonical_form(const FiniteGroup& G, const Hom& h) {
    Hom best = h;
    for (Elt g = 1; g < G.order(); ++g) {
        Hom c = conjugate_hom(G, g, h);
        if (c < best) best = std::move(c);
    }
    return best;
}

std::vector<HomClass> classes(const std::vector<Hom>& homs, const FiniteGroup& G) {
    std::map<Hom, int> index;
    for (int i = 0; i < (int)homs.size(); ++i) index.emplace(homs[i], i);
    if (index.size() != homs.size()) throw Error("classes: duplicate homs in input");
    std::vector<char> visited(homs.size(), 0);
    std::vector<HomClass> out;
    for (const auto& [h, i] : index) {  // map iterates in lex order
        if (visited[i]) continue;
        int orbit = 0;
        for (Elt g = 0; g < G.order(); ++g) {
            Hom c = conjugate_hom(G, g, h);
            auto it = index.find(c);
            if (it == index.end())
                throw Error("classes: input not closed under conjugation");
            if (!visited[it->second]) {
                visited[it->second] = 1;
                ++orbit;
            }
        }
        out.push_back({h, orbit});  // first unvisited in lex order is the orbit minimum
    }
    long long total = 0;
    for (const auto& c : out) total += c.orbit_size;
    if (total != (long long)homs.size()) throw Error("classes: orbit sizes do not add up");
    return out;
}

int find_class(const std::vector<HomClass>& cls, const Hom& canonical) {
    int lo = 0, hi = (int)cls.size();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (cls[mid].canonical < canonical)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < (int)cls.size() && cls[lo].canonical == canonical) return lo;
    return -1;
}

namespace {

std::vector<int> precompose_map(const Endomorphism& e, const std::vector<HomClass>& cls,
                                const FiniteGroup& G) {
    std::vector<int> p(cls.size());
    std::vector<char> hit(cls.size(), 0);
    for (size_t k = 0; k < cls.size(); ++k) {
        const Hom& h = cls[k].canonical;
        Hom image;
        image.images.reserve(e.images.size());
        for (const Word& w : e.images) image.images.push_back(evaluate(G, h, w));
        int j = find_class(cls, canonical_form(G, image));
        if (j < 0) throw Error("endomorphism does not preserve this class set");
        p[k] = j;
        hit[j] = 1;
    }
    for (char c : hit)
        if (!c) throw Error("endomorphism does not act bijectively on classes");
    return p;
}

}  // namespace

std::vector<int> act_pre(const Endomorphism& e, const std::vector<HomClass>& cls,
                         const FiniteGroup& G) {
    return precompose_map(e, cls, G);
}

std::vector<int> act(const Endomorphism& e, const std::vector<HomClass>& cls,
                     const FiniteGroup& G) {
    std::vector<int> p = precompose_map(e, cls, G);
    std::vector<int> inv(p.size());
    for (size_t k = 0; k < p.size(); ++k) inv[p[k]] = (int)k;
    return inv;
}

LabeledSpace labeled_space(const Presentation& P, const FiniteGroup& G,
                           const std::vector<BoundaryComponent>& boundary,
                           const std::vector<LabelPair>& labels) {
    if (boundary.size() != labels.size())
        throw Error("labeled_space: one label pair per boundary component");
    for (const LabelPair& l : labels)
        if (!G.commutes(l.g, l.h))
            throw Error("labeled_space: label pair (" + G.label(l.g) + "," + G.label(l.h) +
                        ") does not commute");
    auto homs = enumerate_homs(P, G);
    std::vector<Hom> kept;
    std::vector<std::vector<Elt>> wit;
    for (const Hom& h : homs) {
        std::vector<Elt> ws;
        bool ok = true;
        for (size_t i = 0; i < boundary.size(); ++i) {
            Elt m = evaluate(G, h, boundary[i].meridian);
            Elt l = evaluate(G, h, boundary[i].longitude);
            Elt found = -1;
            for (Elt a = 0; a < G.order(); ++a)
                if (G.conj(a, m) == labels[i].g && G.conj(a, l) == labels[i].h) {
                    found = a;
                    break;
                }
            if (found < 0) {
                ok = false;
                break;
            }
            ws.push_back(found);
        }
        if (ok) {
            kept.push_back(h);
            wit.push_back(std::move(ws));
        }
    }
    LabeledSpace S;
    S.basis = classes(kept, G);
    for (const HomClass& c : S.basis) {
        auto it = std::lower_bound(kept.begin(), kept.end(), c.canonical);
        S.reps.push_back({c.canonical, wit[it - kept.begin()]});
    }
    return S;
}

}  // namespace dw
