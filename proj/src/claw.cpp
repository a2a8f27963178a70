#include "starlab/claw.hpp"

#include <algorithm>
#include <charconv>

namespace starlab {

Graph::Graph(int vertices) : vertex_count(vertices) {
    if (vertices < 0 || vertices > kMaxGround) throw DomainError("Graph: vertex count out of range");
    adj.assign(static_cast<std::size_t>(vertices), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
        throw DomainError("Graph: edge endpoint out of range");
    if (u == v) throw DomainError("Graph: self-loop");
    adj[static_cast<std::size_t>(u - 1)] |= element_bit(v);
    adj[static_cast<std::size_t>(v - 1)] |= element_bit(u);
}

bool Graph::adjacent(int u, int v) const {
    return (neighbors(u) & element_bit(v)) != 0;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t m : adj) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

bool Graph::is_independent(std::uint64_t bits) const {
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
        if (adj[static_cast<std::size_t>(std::countr_zero(b))] & bits) return false;
    return true;
}

std::string Graph::to_text() const {
    std::string out = "vertices=" + std::to_string(vertex_count) + "\n";
    for (int u = 1; u <= vertex_count; ++u)
        for (int v = u + 1; v <= vertex_count; ++v)
            if (adjacent(u, v)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph Graph::parse_text(std::string_view text) {
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& out) {
        if (pos >= text.size()) return false;
        std::size_t eol = text.find('\n', pos);
        out = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        return true;
    };
    std::string_view line;
    if (!next_line(line) || !line.starts_with("vertices="))
        throw ParseError("graph text: expected header 'vertices=<m>'");
    int m = 0;
    {
        std::string_view v = line.substr(9);
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), m);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ParseError("graph text: bad vertex count");
    }
    Graph g;
    try {
        g = Graph(m);
    } catch (const DomainError& e) {
        throw ParseError(std::string("graph text: ") + e.what());
    }
    while (next_line(line)) {
        if (line.empty() && pos >= text.size()) break;
        std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos) throw ParseError("graph text: expected 'u v'");
        int u = 0, v = 0;
        auto [p1, e1] = std::from_chars(line.data(), line.data() + sp, u);
        auto [p2, e2] = std::from_chars(line.data() + sp + 1, line.data() + line.size(), v);
        if (e1 != std::errc() || e2 != std::errc() || p1 != line.data() + sp ||
            p2 != line.data() + line.size())
            throw ParseError("graph text: bad edge line");
        try {
            g.add_edge(u, v);
        } catch (const DomainError& e) {
            throw ParseError(std::string("graph text: ") + e.what());
        }
    }
    return g;
}

std::pair<Graph, ClawLayout> build_tn(int n) {
    if (n < 1 || n > 30) throw SizeLimitError("build_tn: need 1 <= n <= 30");
    ClawLayout layout{n};
    Graph g(layout.ground());
    for (int i = 1; i <= n; ++i) {
        g.add_edge(layout.x0(), layout.y(i));
        g.add_edge(layout.x(i), layout.y(i));
    }
    return {std::move(g), layout};
}

Family independent_sets(const Graph& g, int r) {
    if (r < 0) throw DomainError("independent_sets: r must be non-negative");
    std::vector<std::uint64_t> out;
    // Choose vertices in increasing order; `blocked` is the union of the
    // neighborhoods of the chosen prefix.
    auto rec = [&](auto&& self, int next, int left, std::uint64_t acc, std::uint64_t blocked) -> void {
        if (left == 0) {
            out.push_back(acc);
            if (out.size() > kMaxFamilyMembers)
                throw SizeLimitError("independent_sets: output exceeds the enumeration guard");
            return;
        }
        for (int v = next; v <= g.vertex_count - left + 1; ++v) {
            if (blocked & element_bit(v)) continue;
            self(self, v + 1, left - 1, acc | element_bit(v), blocked | g.neighbors(v));
        }
    };
    rec(rec, 1, r, 0, 0);
    return Family::from_masks(g.vertex_count, std::move(out));
}

Family enumerate_itn(int n, int r) {
    if (n < 1 || n > 30) throw SizeLimitError("enumerate_itn: need 1 <= n <= 30");
    if (r < 0) throw DomainError("enumerate_itn: r must be non-negative");
    ClawLayout layout{n};
    if (r > n + 1) return Family(layout.ground());
    std::uint64_t count = binom(n, r - 1);
    {
        std::uint64_t part = binom(n, r);
        for (int t = 0; t < r && part > 0; ++t) part *= 2;
        count += part;
        if (count > kMaxFamilyMembers)
            throw SizeLimitError("enumerate_itn: C(n,r)*2^r + C(n,r-1) exceeds the enumeration guard");
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    // Part one: r indices, each carrying x_i or y_i.
    std::vector<int> idx(static_cast<std::size_t>(std::max(r, 0)));
    auto emit_labels = [&](auto&& self, int t, std::uint64_t acc) -> void {
        if (t == r) { out.push_back(acc); return; }
        int i = idx[static_cast<std::size_t>(t)];
        self(self, t + 1, acc | element_bit(layout.x(i)));
        self(self, t + 1, acc | element_bit(layout.y(i)));
    };
    auto choose = [&](auto&& self, int t, int lo) -> void {
        if (t == r) { emit_labels(emit_labels, 0, 0); return; }
        for (int i = lo; i <= n - (r - t - 1); ++i) {
            idx[static_cast<std::size_t>(t)] = i;
            self(self, t + 1, i + 1);
        }
    };
    if (r <= n) choose(choose, 0, 1);
    // Part two: x_0 together with r-1 of the x_i.
    if (r >= 1) {
        auto choose0 = [&](auto&& self, int t, int lo, std::uint64_t acc) -> void {
            if (t == r - 1) { out.push_back(acc); return; }
            for (int i = lo; i <= n - (r - 1 - t - 1); ++i)
                self(self, t + 1, i + 1, acc | element_bit(layout.x(i)));
        };
        choose0(choose0, 0, 1, layout.x0_bit());
    }
    return Family::from_masks(layout.ground(), std::move(out));
}

int mu(const Graph& g) {
    if (g.vertex_count > 24) throw SizeLimitError("mu: vertex count > 24");
    if (g.vertex_count == 0) return 0;
    std::uint64_t all = SetMask::full(g.vertex_count).bits;
    int best = g.vertex_count + 1;
    // `free` holds vertices outside N[chosen]. Any maximal independent set
    // must contain a vertex of N[v] for the first free v, so branching over
    // that closed neighborhood covers all of them.
    auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t free, int size) -> void {
        if (size >= best) return;
        if (free == 0) { best = size; return; }
        int v = std::countr_zero(free) + 1;
        std::uint64_t candidates = (g.neighbors(v) | element_bit(v)) & free;
        for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
            int u = std::countr_zero(c) + 1;
            std::uint64_t closed = g.neighbors(u) | element_bit(u);
            self(self, chosen | element_bit(u), free & ~closed, size + 1);
        }
    };
    rec(rec, 0, all, 0);
    return best;
}

namespace {

// r from a uniform family, with membership in I_{T_n}^(r) verified.
int require_itn_subfamily(const ClawLayout& layout, const Graph& g, const Family& f,
                          const char* who) {
    if (f.ground_size() != layout.ground())
        throw DomainError(std::string(who) + ": ground size mismatch");
    if (f.empty()) return 0;
    int r = std::popcount(f.bits_at(0));
    for (std::uint64_t m : f.masks()) {
        if (std::popcount(m) != r)
            throw DomainError(std::string(who) + ": family is not contained in one slice");
        if (!g.is_independent(m))
            throw DomainError(std::string(who) + ": member is not independent in T_n");
    }
    return r;
}

} // namespace

SetMask gamma(const ClawLayout& layout, const SetMask& a, const Family& r_family) {
    if (a.ground != layout.ground()) throw DomainError("gamma: ground size mismatch");
    if (!r_family.contains(a.bits)) throw DomainError("gamma: set not in the reference family");
    std::uint64_t x0 = layout.x0_bit();
    std::uint64_t y1 = element_bit(layout.y(1));
    if ((a.bits & x0) == 0 || (a.bits & y1) != 0) return a;
    std::uint64_t image = (a.bits & ~x0) | y1;
    return r_family.contains(image) ? SetMask(image, a.ground) : a;
}

Family gamma_compress(const ClawLayout& layout, const Family& f) {
    auto [g, lay] = build_tn(layout.n);
    int r = require_itn_subfamily(layout, g, f, "gamma_compress");
    if (f.empty()) return f;
    Family r_family = enumerate_itn(layout.n, r);
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) {
        std::uint64_t d = gamma(layout, SetMask(m, f.ground_size()), r_family).bits;
        out.push_back(d == m || f.contains(d) ? m : d);
    }
    return Family::from_masks(f.ground_size(), std::move(out));
}

SplitX0 split_x0(const ClawLayout& layout, const Family& h) {
    auto [g, lay] = build_tn(layout.n);
    require_itn_subfamily(layout, g, h, "split_x0");
    std::uint64_t x0 = layout.x0_bit();
    std::vector<std::uint64_t> h0, h1, h1p;
    for (std::uint64_t m : h.masks()) {
        if (m & x0) {
            h1.push_back(m);
            // Members with x_0 contain no y_i, so dropping bit 1 and
            // shifting re-encodes x_i as element i.
            h1p.push_back((m & ~x0) >> 1);
        } else {
            h0.push_back(m);
        }
    }
    return SplitX0{Family::from_masks(layout.ground(), std::move(h0)),
                   Family::from_masks(layout.ground(), std::move(h1)),
                   Family::from_masks(layout.n, std::move(h1p))};
}

std::string claw_family_to_text(const ClawLayout& layout, const Family& f) {
    if (f.ground_size() != layout.ground())
        throw DomainError("claw_family_to_text: ground size mismatch");
    std::string header = "# T_n n=" + std::to_string(layout.n) + " vertices: x0=1";
    for (int i = 1; i <= layout.n; ++i)
        header += " x" + std::to_string(i) + "=" + std::to_string(layout.x(i));
    for (int i = 1; i <= layout.n; ++i)
        header += " y" + std::to_string(i) + "=" + std::to_string(layout.y(i));
    return header + "\n" + f.to_text();
}

std::pair<ClawLayout, Family> claw_family_parse_text(std::string_view text) {
    if (!text.starts_with("# T_n n="))
        throw ParseError("claw family text: expected '# T_n n=<n>' header");
    std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) throw ParseError("claw family text: missing body");
    std::string_view header = text.substr(8, eol - 8);
    std::size_t sp = header.find(' ');
    int n = 0;
    std::string_view v = header.substr(0, sp);
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
    if (ec != std::errc() || p != v.data() + v.size() || n < 1 || n > 30)
        throw ParseError("claw family text: bad n");
    ClawLayout layout{n};
    Family f = Family::parse_text(text.substr(eol + 1));
    if (f.ground_size() != layout.ground())
        throw ParseError("claw family text: ground size does not match 2n+1");
    return {layout, f};
}

} // namespace starlab
