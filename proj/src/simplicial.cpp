#include "dw/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include <json.hpp>

namespace dw {

void Triangulation::finalize() {
    if (vertex_count < 1) throw Error("triangulation needs at least one vertex");
    std::set<std::pair<int, int>> eset;
    auto add_edge = [&](int a, int b) {
        if (a == b) throw Error("degenerate edge");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= vertex_count) throw Error("edge vertex out of range");
        eset.insert({a, b});
    };
    for (const auto& t : triangles) {
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
            throw Error("triangle with repeated vertices");
        for (int v : t)
            if (v < 0 || v >= vertex_count) throw Error("triangle vertex out of range");
        add_edge(t[0], t[1]);
        add_edge(t[1], t[2]);
        add_edge(t[0], t[2]);
    }
    for (auto [a, b] : extra_edges) add_edge(a, b);
    edges.assign(eset.begin(), eset.end());
    for (int v : boundary_vertices)
        if (v < 0 || v >= vertex_count) throw Error("boundary vertex out of range");

    triangle_edges.clear();
    std::vector<int> incidence(edges.size(), 0);
    for (const auto& t : triangles) {
        std::array<int, 3> s = t;
        std::sort(s.begin(), s.end());
        int e01 = edge_id(s[0], s[1]), e12 = edge_id(s[1], s[2]), e02 = edge_id(s[0], s[2]);
        triangle_edges.push_back({e01, e12, e02});
        ++incidence[e01];
        ++incidence[e12];
        ++incidence[e02];
    }
    edge_on_boundary.assign(edges.size(), 0);
    for (size_t e = 0; e < edges.size(); ++e)
        if (incidence[e] == 1) edge_on_boundary[e] = 1;
}

int Triangulation::edge_id(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (it != edges.end() && *it == std::make_pair(a, b)) return int(it - edges.begin());
    return -1;
}

bool Triangulation::connected() const {
    if (vertex_count == 0) return true;
    std::vector<char> seen(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [a, b] : edges) {
            int other = -1;
            if (a == v) other = b;
            else if (b == v) other = a;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                ++cnt;
                q.push(other);
            }
        }
    }
    return cnt == vertex_count;
}

Triangulation triangulation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("triangulation JSON: ") + e.what());
    }
    Triangulation T;
    T.vertex_count = j.at("vertices").get<int>();
    for (const auto& t : j.value("triangles", nlohmann::json::array()))
        T.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    for (const auto& v : j.value("boundary_vertices", nlohmann::json::array()))
        T.boundary_vertices.push_back(v.get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array()))
        T.extra_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    T.finalize();
    return T;
}

std::string triangulation_to_json(const Triangulation& T) {
    nlohmann::ordered_json j;
    j["vertices"] = T.vertex_count;
    j["triangles"] = nlohmann::json::array();
    for (const auto& t : T.triangles) j["triangles"].push_back({t[0], t[1], t[2]});
    j["boundary_vertices"] = T.boundary_vertices;
    if (!T.extra_edges.empty()) {
        j["edges"] = nlohmann::json::array();
        for (auto [a, b] : T.extra_edges) j["edges"].push_back({a, b});
    }
    return j.dump(2);
}

BoundaryColoring boundary_coloring_from_json(const std::string& text, const FiniteGroup& G) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("boundary coloring JSON: ") + e.what());
    }
    BoundaryColoring tau;
    for (const auto& e : j.at("edges")) {
        std::string lab = e.at(2).get<std::string>();
        auto g = G.element_by_label(lab);
        if (!g) throw Error("boundary coloring: unknown element label '" + lab + "'");
        tau.entries.push_back({{e.at(0).get<int>(), e.at(1).get<int>()}, *g});
    }
    return tau;
}

bool within_state_cap(const Triangulation&, const FiniteGroup& G, int free_edges) {
    double states = std::pow((double)G.order(), (double)free_edges);
    return states <= double(1 << 24);
}

namespace {

struct ColoringSearch {
    const Triangulation& T;
    const FiniteGroup& G;
    std::vector<Elt> color;    // -1 = unassigned
    std::vector<int> order;    // free edges in assignment order
    // triangles checked as soon as their last edge is assigned
    std::vector<std::vector<int>> check_after;  // per order position: triangle ids

    ColoringSearch(const Triangulation& t, const FiniteGroup& g,
                   const std::optional<BoundaryColoring>& tau)
        : T(t), G(g), color(t.edges.size(), -1) {
        if (tau) {
            std::vector<char> colored(T.edges.size(), 0);
            for (auto [edge, elt] : tau->entries) {
                auto [a, b] = edge;
                int id = T.edge_id(a, b);
                if (id < 0)
                    throw Error("boundary coloring mentions a non-edge (" + std::to_string(a) +
                                "," + std::to_string(b) + ")");
                if (!T.edge_on_boundary[id])
                    throw Error("boundary coloring colors a non-boundary edge");
                if (colored[id]) throw Error("boundary coloring repeats an edge");
                colored[id] = 1;
                color[id] = (a < b) ? elt : G.inv(elt);  // stored low->high
            }
            for (size_t e = 0; e < T.edges.size(); ++e)
                if (T.edge_on_boundary[e] && !colored[e])
                    throw Error("boundary coloring misses a boundary edge");
            // boundary triangles (all three edges colored) must be flat already
            for (size_t ti = 0; ti < T.triangles.size(); ++ti) {
                const auto& te = T.triangle_edges[ti];
                if (color[te[0]] >= 0 && color[te[1]] >= 0 && color[te[2]] >= 0)
                    if (G.mul(color[te[0]], color[te[1]]) != color[te[2]])
                        throw Error("boundary coloring is inconsistent on a boundary triangle");
            }
        }
        for (size_t e = 0; e < T.edges.size(); ++e)
            if (color[e] < 0) order.push_back((int)e);
        if (!within_state_cap(T, G, (int)order.size()))
            throw Error("coloring search exceeds the 2^24 state cap");
        // map each triangle to the latest order position among its edges
        std::vector<int> pos(T.edges.size(), -1);
        for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = (int)k;
        check_after.assign(order.size(), {});
        for (size_t ti = 0; ti < T.triangles.size(); ++ti) {
            int last = -1;
            for (int e : T.triangle_edges[ti]) last = std::max(last, pos[e]);
            if (last >= 0) check_after[last].push_back((int)ti);
        }
    }

    bool flat(int ti) const {
        const auto& te = T.triangle_edges[ti];
        return G.mul(color[te[0]], color[te[1]]) == color[te[2]];
    }

    long long count(size_t k) {
        if (k == order.size()) return 1;
        long long total = 0;
        for (Elt g = 0; g < G.order(); ++g) {
            color[order[k]] = g;
            bool ok = true;
            for (int ti : check_after[k])
                if (!flat(ti)) {
                    ok = false;
                    break;
                }
            if (ok) total += count(k + 1);
        }
        color[order[k]] = -1;
        return total;
    }

    void enumerate(size_t k, std::vector<std::vector<Elt>>& out) {
        if (k == order.size()) {
            out.push_back(color);
            return;
        }
        for (Elt g = 0; g < G.order(); ++g) {
            color[order[k]] = g;
            bool ok = true;
            for (int ti : check_after[k])
                if (!flat(ti)) {
                    ok = false;
                    break;
                }
            if (ok) enumerate(k + 1, out);
        }
        color[order[k]] = -1;
    }
};

}  // namespace

long long count_colorings(const Triangulation& T, const FiniteGroup& G,
                          const std::optional<BoundaryColoring>& tau) {
    ColoringSearch s(T, G, tau);
    // triangles fully colored by tau were validated in the constructor
    return s.count(0);
}

std::vector<std::vector<Elt>> enumerate_colorings(const Triangulation& T, const FiniteGroup& G) {
    ColoringSearch s(T, G, std::nullopt);
    std::vector<std::vector<Elt>> out;
    s.enumerate(0, out);
    return out;
}

bool StateSumValue::same_value(const StateSumValue& o) const {
    if (group_order != o.group_order) return false;
    if (count == 0 || o.count == 0) return count == o.count;
    // count1 * r^k1 == count2 * r^k2 with r = sqrt(|G|), compare squares exactly
    __int128 lhs = (__int128)count * count;
    __int128 rhs = (__int128)o.count * o.count;
    int dk = half_exponent - o.half_exponent;
    for (int i = 0; i < std::abs(dk); ++i) {
        if (dk > 0)
            lhs *= group_order;
        else
            rhs *= group_order;
    }
    return lhs == rhs;
}

double StateSumValue::approx() const {
    return double(count) * std::pow((double)group_order, half_exponent / 2.0);
}

StateSumValue partition_function(const Triangulation& T, const FiniteGroup& G,
                                 const std::optional<BoundaryColoring>& tau) {
    StateSumValue v;
    v.count = count_colorings(T, G, tau);
    v.half_exponent = T.boundary_vertex_count() - 2 * T.vertex_count;
    v.group_order = G.order();
    return v;
}

namespace {

// BFS spanning tree; parent edge per vertex, -1 at the root.
std::vector<int> spanning_tree(const Triangulation& T) {
    std::vector<std::vector<std::pair<int, int>>> adj(T.vertex_count);  // (other, edge id)
    for (size_t e = 0; e < T.edges.size(); ++e) {
        auto [a, b] = T.edges[e];
        adj[a].push_back({b, (int)e});
        adj[b].push_back({a, (int)e});
    }
    std::vector<int> parent_edge(T.vertex_count, -2);
    std::queue<int> q;
    q.push(0);
    parent_edge[0] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, e] : adj[v])
            if (parent_edge[w] == -2) {
                parent_edge[w] = e;
                q.push(w);
            }
    }
    for (int v = 0; v < T.vertex_count; ++v)
        if (parent_edge[v] == -2) throw Error("complex is disconnected");
    return parent_edge;
}

}  // namespace

Presentation presentation_from_triangulation(const Triangulation& T) {
    auto parent_edge = spanning_tree(T);
    std::vector<char> in_tree(T.edges.size(), 0);
    for (int v = 0; v < T.vertex_count; ++v)
        if (parent_edge[v] >= 0) in_tree[parent_edge[v]] = 1;
    Presentation P;
    std::vector<int> gen_of_edge(T.edges.size(), -1);
    for (size_t e = 0; e < T.edges.size(); ++e)
        if (!in_tree[e]) {
            gen_of_edge[e] = P.num_generators();
            P.generator_names.push_back("e" + std::to_string(T.edges[e].first) + "_" +
                                        std::to_string(T.edges[e].second));
        }
    // relator per triangle: (01)(12)(02)^-1 on sorted vertices, tree edges dropped
    for (const auto& te : T.triangle_edges) {
        Word w;
        auto letter = [&](int e, int sgn) {
            if (gen_of_edge[e] >= 0) w = w * Word::gen(gen_of_edge[e], sgn);
        };
        letter(te[0], 1);
        letter(te[1], 1);
        letter(te[2], -1);
        P.relators.push_back(std::move(w));
    }
    return P;
}

Hom holonomy_of_coloring(const Triangulation& T, const FiniteGroup& G,
                         const std::vector<Elt>& edge_colors) {
    auto parent_edge = spanning_tree(T);
    std::vector<char> in_tree(T.edges.size(), 0);
    for (int v = 0; v < T.vertex_count; ++v)
        if (parent_edge[v] >= 0) in_tree[parent_edge[v]] = 1;
    // path product root -> v along the tree
    std::vector<Elt> to(T.vertex_count, -1);
    to[0] = FiniteGroup::id;
    // repeated sweeps; vertex count is tiny
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < T.vertex_count; ++v) {
            if (to[v] >= 0 || parent_edge[v] < 0) continue;
            auto [a, b] = T.edges[parent_edge[v]];
            int u = (a == v) ? b : a;
            if (to[u] < 0) continue;
            Elt c = edge_colors[parent_edge[v]];
            // color is a->b; traversing u->v
            to[v] = G.mul(to[u], (u == a) ? c : G.inv(c));
            changed = true;
        }
    }
    Hom h;
    for (size_t e = 0; e < T.edges.size(); ++e) {
        if (in_tree[e]) continue;
        auto [a, b] = T.edges[e];
        // loop root->a --e--> b->root
        h.images.push_back(G.mul(G.mul(to[a], edge_colors[e]), G.inv(to[b])));
    }
    return h;
}

Lemma1Report verify_lemma1(const Triangulation& T, const FiniteGroup& G) {
    Lemma1Report r;
    r.colorings = count_colorings(T, G);
    Presentation P = presentation_from_triangulation(T);
    r.hom_count = (long long)enumerate_homs(P, G).size();
    long long pw = 1;
    for (int i = 0; i < T.vertex_count - 1; ++i) pw *= G.order();
    r.expected = pw * r.hom_count;
    r.ok = (r.colorings == r.expected);
    return r;
}

IdempotentReport verify_idempotent_blocks(const Triangulation& Y, const Triangulation& YI,
                                          const std::vector<int>& bottom_map,
                                          const std::vector<int>& top_map, const FiniteGroup& G) {
    if ((int)bottom_map.size() != Y.vertex_count || (int)top_map.size() != Y.vertex_count)
        throw Error("idempotent check: vertex maps must cover the boundary copies");
    auto cols = enumerate_colorings(Y, G);
    int N = (int)cols.size();
    IdempotentReport rep;
    rep.dim = N;

    // class of each coloring via holonomy canonical form, plus |C(Im)|
    std::vector<int> cls(N);
    std::vector<long long> cent(N);
    std::map<Hom, int> class_index;
    std::vector<long long> class_cent;
    for (int i = 0; i < N; ++i) {
        Hom h = holonomy_of_coloring(Y, G, cols[i]);
        Hom c = canonical_form(G, h);
        auto [it, fresh] = class_index.emplace(c, (int)class_index.size());
        if (fresh) {
            std::vector<Elt> img(c.images.begin(), c.images.end());
            class_cent.push_back((long long)centralizer(G, img).size());
        }
        cls[i] = it->second;
        cent[i] = class_cent[it->second];
    }
    rep.blocks = (int)class_index.size();

    // counts C[i][j] = #Col(YxI, tau_i on bottom + tau_j on top)
    auto transfer = [&](const std::vector<Elt>& ycol, const std::vector<int>& vmap,
                        BoundaryColoring& tau) {
        for (size_t e = 0; e < Y.edges.size(); ++e) {
            auto [a, b] = Y.edges[e];
            tau.entries.push_back({{vmap[a], vmap[b]}, ycol[e]});
        }
    };
    std::vector<std::vector<long long>> C(N, std::vector<long long>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            BoundaryColoring tau;
            transfer(cols[i], bottom_map, tau);
            transfer(cols[j], top_map, tau);
            C[i][j] = count_colorings(YI, G, tau);
        }

    // Z = C / |G|^(a - v); block value |C_G(Im)| / |G|^v
    // block test: C[i][j]*|G|^v == |C| * |G|^(a-v) on-class, 0 off-class
    long long gv = 1;
    for (int k = 0; k < Y.vertex_count; ++k) gv *= G.order();
    long long gav = 1;
    for (int k = 0; k < YI.vertex_count - Y.vertex_count; ++k) gav *= G.order();
    rep.block_diagonal = true;
    for (int i = 0; i < N && rep.block_diagonal; ++i)
        for (int j = 0; j < N; ++j) {
            if (cls[i] != cls[j]) {
                if (C[i][j] != 0) {
                    rep.block_diagonal = false;
                    break;
                }
            } else if ((__int128)C[i][j] * gv != (__int128)cent[i] * gav) {
                rep.block_diagonal = false;
                break;
            }
        }
    // idempotency: sum_k C[i][k] C[k][j] == C[i][j] * |G|^(a-v)
    rep.idempotent = true;
    for (int i = 0; i < N && rep.idempotent; ++i)
        for (int j = 0; j < N; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < N; ++k) acc += (__int128)C[i][k] * C[k][j];
            if (acc != (__int128)C[i][j] * gav) {
                rep.idempotent = false;
                break;
            }
        }
    return rep;
}

Triangulation circle_triangulation(int n) {
    if (n < 3) throw Error("circle fixture needs n >= 3");
    Triangulation T;
    T.vertex_count = n;
    for (int i = 0; i < n; ++i) T.extra_edges.push_back({i, (i + 1) % n});
    T.finalize();
    return T;
}

Triangulation disk_one_triangle() {
    Triangulation T;
    T.vertex_count = 3;
    T.triangles = {{0, 1, 2}};
    T.boundary_vertices = {0, 1, 2};
    T.finalize();
    return T;
}

Triangulation disk_cone() {
    Triangulation T;
    T.vertex_count = 4;
    T.triangles = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
    T.boundary_vertices = {0, 1, 2};
    T.finalize();
    return T;
}

Triangulation annulus_triangulation(int n) {
    if (n < 3) throw Error("annulus fixture needs n >= 3");
    Triangulation T;
    T.vertex_count = 2 * n;
    for (int i = 0; i < n; ++i) {
        int a = i, b = (i + 1) % n, at = i + n, bt = (i + 1) % n + n;
        T.triangles.push_back({a, b, bt});
        T.triangles.push_back({a, bt, at});
    }
    for (int i = 0; i < 2 * n; ++i) T.boundary_vertices.push_back(i);
    T.finalize();
    return T;
}

Triangulation torus_seven_vertex() {
    Triangulation T;
    T.vertex_count = 7;
    for (int i = 0; i < 7; ++i) {
        T.triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        T.triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    T.finalize();
    return T;
}

}  // namespace dw
