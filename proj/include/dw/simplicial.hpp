#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dw/group.hpp"
#include "dw/hom.hpp"
#include "dw/word.hpp"

namespace dw {

/// A simplicial complex of dimension <= 2. Edges are derived from triangles;
/// `extra_edges` carries 1-cells that lie in no triangle (e.g. a triangulated
/// circle). Edges are stored low-vertex -> high-vertex.
struct Triangulation {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<int> boundary_vertices;
    std::vector<std::pair<int, int>> extra_edges;

    // derived
    std::vector<std::pair<int, int>> edges;         // sorted unique, low<high
    std::vector<std::array<int, 3>> triangle_edges; // edge ids (01,12,02) per triangle
    std::vector<char> edge_on_boundary;             // edge in exactly one triangle

    void finalize();  // builds the derived data, validates
    int edge_id(int a, int b) const;  // -1 when absent
    int boundary_vertex_count() const { return (int)boundary_vertices.size(); }
    bool connected() const;
};

Triangulation triangulation_from_json(const std::string& text);
std::string triangulation_to_json(const Triangulation& T);

/// Boundary coloring: one group element per boundary edge, keyed by edge id.
struct BoundaryColoring {
    std::vector<std::pair<std::pair<int, int>, Elt>> entries;  // ((a,b), color of a->b)
};
BoundaryColoring boundary_coloring_from_json(const std::string& text, const FiniteGroup& G);

/// Exact #Col(M, tau) by backtracking over the free edges with per-triangle
/// flatness pruning. tau must color exactly the boundary edges; a flatness
/// violation on a triangle all of whose edges are boundary edges is an error.
long long count_colorings(const Triangulation& T, const FiniteGroup& G,
                          const std::optional<BoundaryColoring>& tau = std::nullopt);

/// Exact state-sum value count * |G|^(half_exponent/2).
struct StateSumValue {
    long long count = 0;
    int half_exponent = 0;  // = boundary_vertices - 2*vertices
    int group_order = 1;
    bool same_value(const StateSumValue& o) const;
    double approx() const;
};

StateSumValue partition_function(const Triangulation& T, const FiniteGroup& G,
                                 const std::optional<BoundaryColoring>& tau = std::nullopt);

/// Spanning-tree presentation of the fundamental group: one generator per
/// non-tree edge, one relator per triangle. Throws on a disconnected complex.
Presentation presentation_from_triangulation(const Triangulation& T);

/// Holonomy hom of a full coloring with respect to the spanning-tree
/// presentation (same tree as presentation_from_triangulation).
Hom holonomy_of_coloring(const Triangulation& T, const FiniteGroup& G,
                         const std::vector<Elt>& edge_colors);

/// All flat colorings (full edge assignments). Guarded by the state cap.
std::vector<std::vector<Elt>> enumerate_colorings(const Triangulation& T, const FiniteGroup& G);

struct Lemma1Report {
    long long colorings = 0;
    long long hom_count = 0;
    long long expected = 0;  // |G|^(v-1) * hom_count
    bool ok = false;
};
Lemma1Report verify_lemma1(const Triangulation& T, const FiniteGroup& G);

struct IdempotentReport {
    int dim = 0;           // number of colorings of Y
    int blocks = 0;        // number of holonomy classes
    bool block_diagonal = false;  // off-class entries vanish, in-class = |C|/|G|^v
    bool idempotent = false;      // Z(Id_Y)^2 = Z(Id_Y) exactly
    bool ok() const { return block_diagonal && idempotent; }
};

/// Checks the Z(Id_Y) block structure on a product triangulation of Y x I.
/// bottom_map/top_map send Y's vertices to the two boundary copies in YI.
IdempotentReport verify_idempotent_blocks(const Triangulation& Y, const Triangulation& YI,
                                          const std::vector<int>& bottom_map,
                                          const std::vector<int>& top_map, const FiniteGroup& G);

// Built-in fixtures (also shipped as JSON under data/).
Triangulation circle_triangulation(int n = 3);
Triangulation disk_one_triangle();
Triangulation disk_cone();            // same 3-cycle boundary, coned interior vertex
Triangulation annulus_triangulation(int n = 3);  // circle(n) x I, 2n vertices
Triangulation torus_seven_vertex();

/// Raw state cap for coloring enumeration: |G|^(free edges) <= 2^24.
bool within_state_cap(const Triangulation& T, const FiniteGroup& G, int free_edges);

}  // namespace dw
