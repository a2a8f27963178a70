#ifndef STARLAB_CLAW_HPP
#define STARLAB_CLAW_HPP

#include <string>
#include <utility>
#include <vector>

#include "starlab/family.hpp"

namespace starlab {

// A small simple graph on vertices 1..vertex_count with one adjacency mask
// per vertex.
struct Graph {
    int vertex_count = 0;
    std::vector<std::uint64_t> adj; // adj[v-1] = neighbor mask of vertex v

    Graph() = default;
    explicit Graph(int vertices);

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::uint64_t neighbors(int v) const { return adj[static_cast<std::size_t>(v - 1)]; }
    std::size_t edge_count() const;

    bool is_independent(std::uint64_t bits) const;

    // Text format: "vertices=<m>" then one line "u v" per edge, u < v,
    // lexicographic order.
    std::string to_text() const;
    static Graph parse_text(std::string_view text);
};

// Fixed vertex layout of the depth-two claw T_n: x_0 at element 1, then
// x_1..x_n, then y_1..y_n (ground size 2n+1). Keeping X_n contiguous makes
// trace and |A op B op X_n| tests single mask operations.
struct ClawLayout {
    int n = 0;

    int x0() const { return 1; }
    int x(int i) const { return 1 + i; }
    int y(int i) const { return 1 + n + i; }
    int ground() const { return 2 * n + 1; }

    std::uint64_t x0_bit() const { return element_bit(x0()); }
    std::uint64_t xn_bits() const {
        std::uint64_t b = 0;
        for (int i = 1; i <= n; ++i) b |= element_bit(x(i));
        return b;
    }
};

// T_n: the n disjoint edges x_i y_i plus the center x_0 adjacent to every
// y_i. 1 <= n <= 30 keeps the ground set within one word.
std::pair<Graph, ClawLayout> build_tn(int n);

// All r-element independent sets, by backtracking with neighborhood
// pruning; canonical output order.
Family independent_sets(const Graph& g, int r);

// I_{T_n}^(r) assembled from its two parts: the label sets on distinct
// indices and the x_0 sets over X_n. No graph search involved, so this is
// an independent route against independent_sets(T_n, r).
Family enumerate_itn(int n, int r);

// Size of a smallest maximal independent set, by branching on the first
// undominated vertex (every maximal independent set must hit its closed
// neighborhood).
int mu(const Graph& g);

// gamma: move x_0 to y_1 when the result stays inside R = I_{T_n}^(r).
SetMask gamma(const ClawLayout& layout, const SetMask& a, const Family& r_family);

// The Gamma compression of a subfamily of I_{T_n}^(r); size-preserving.
Family gamma_compress(const ClawLayout& layout, const Family& f);

struct SplitX0 {
    Family h0;      // members avoiding x_0, over the claw ground set
    Family h1;      // members containing x_0, over the claw ground set
    Family h1prime; // h1 with x_0 removed, re-encoded over [n] via x_i -> i
};

SplitX0 split_x0(const ClawLayout& layout, const Family& h);

// Claw family text: a '#' header naming the vertex layout, then the plain
// family text format.
std::string claw_family_to_text(const ClawLayout& layout, const Family& f);
std::pair<ClawLayout, Family> claw_family_parse_text(std::string_view text);

} // namespace starlab

#endif
