#include "starlab/search.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <cstdio>
#include <cstdlib>

#include "starlab/core_ops.hpp"

namespace starlab {

namespace {

// Branch-and-bound maximum clique over a bitset adjacency matrix, with
// greedy-coloring upper bounds (Tomita-style). Everything iterates in
// vertex order, so results are bit-for-bit reproducible.
class CliqueSolver {
public:
    CliqueSolver(std::size_t m, const std::vector<std::uint64_t>& member_masks)
        : m_(m), words_((m + 63) / 64), rows_(m * words_, 0) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (member_masks[i] & member_masks[j]) {
                    rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
                    rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
                }
    }

    std::uint64_t nodes() const { return nodes_; }

    std::vector<std::uint64_t> all_vertices() const {
        std::vector<std::uint64_t> s(words_, 0);
        for (std::size_t v = 0; v < m_; ++v) s[v / 64] |= std::uint64_t{1} << (v % 64);
        return s;
    }

    // Takes the lowest-index compatible vertex repeatedly; the size reached
    // seeds the incumbent and fast-paths feasibility queries.
    int greedy_clique(std::vector<std::uint64_t> cand) const {
        int size = 0;
        for (;;) {
            int v = first_bit(cand);
            if (v < 0) return size;
            ++size;
            intersect_neighbors(cand, static_cast<std::size_t>(v), cand);
        }
    }

    int maximize(int initial_best) {
        best_ = initial_best;
        Level& root = level(0);
        root.cand = all_vertices();
        expand_max(0, 0);
        return best_;
    }

    bool exists(const std::vector<std::uint64_t>& cand, int target) {
        if (target <= 0) return true;
        if (greedy_clique(cand) >= target) return true;
        Level& root = level(0);
        root.cand = cand;
        return expand_exists(0, 0, target);
    }

    void intersect_neighbors(const std::vector<std::uint64_t>& src, std::size_t v,
                             std::vector<std::uint64_t>& dst) const {
        const std::uint64_t* row = &rows_[v * words_];
        for (std::size_t w = 0; w < words_; ++w) dst[w] = src[w] & row[w];
    }

    static bool test_bit(const std::vector<std::uint64_t>& s, std::size_t v) {
        return (s[v / 64] >> (v % 64)) & 1;
    }
    static void clear_bit(std::vector<std::uint64_t>& s, std::size_t v) {
        s[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

private:
    struct Level {
        std::vector<std::uint64_t> cand, scratch, scratch2;
        std::vector<std::vector<std::uint64_t>> classes;
        std::vector<int> order, color;
    };

    Level& level(std::size_t d) {
        while (levels_.size() <= d) {
            Level l;
            l.cand.assign(words_, 0);
            l.scratch.assign(words_, 0);
            l.scratch2.assign(words_, 0);
            l.order.assign(m_, 0);
            l.color.assign(m_, 0);
            levels_.push_back(std::move(l));
        }
        return levels_[d];
    }

    static int first_bit(const std::vector<std::uint64_t>& s) {
        for (std::size_t w = 0; w < s.size(); ++w)
            if (s[w]) return static_cast<int>(w * 64 + std::countr_zero(s[w]));
        return -1;
    }

    static int popcount_all(const std::vector<std::uint64_t>& s) {
        int c = 0;
        for (std::uint64_t w : s) c += std::popcount(w);
        return c;
    }

    bool disjoint_row(const std::vector<std::uint64_t>& s, std::size_t v) const {
        const std::uint64_t* row = &rows_[v * words_];
        for (std::size_t w = 0; w < words_; ++w)
            if (s[w] & row[w]) return false;
        return true;
    }

    // Greedy coloring by class peeling, then a recoloring pass: a vertex
    // stuck in a branching class (color > kmin) moves into a low class k1
    // when its single conflict vertex there can itself move to another low
    // class. Vertices are emitted class by class, so colors are
    // nondecreasing along `order`.
    int color_sort(Level& l, int kmin) {
        if (kmin < 0) kmin = 0;
        int k = 0;
        l.scratch = l.cand;
        while (first_bit(l.scratch) >= 0) {
            if (l.classes.size() <= static_cast<std::size_t>(k)) l.classes.emplace_back(words_, 0);
            auto& cls = l.classes[static_cast<std::size_t>(k)];
            std::fill(cls.begin(), cls.end(), 0);
            // One greedy layer: take the lowest vertex still eligible,
            // knock out its neighbors, repeat.
            l.scratch2 = l.scratch;
            for (;;) {
                int v = first_bit(l.scratch2);
                if (v < 0) break;
                auto vu = static_cast<std::size_t>(v);
                cls[vu / 64] |= std::uint64_t{1} << (vu % 64);
                clear_bit(l.scratch, vu);
                clear_bit(l.scratch2, vu);
                const std::uint64_t* row = &rows_[vu * words_];
                for (std::size_t w = 0; w < words_; ++w) l.scratch2[w] &= ~row[w];
            }
            ++k;
        }
        // Recolor branching-class vertices downward where possible.
        if (kmin >= 2 && k > kmin) {
            for (int c = kmin; c < k; ++c) {
                auto& chigh = l.classes[static_cast<std::size_t>(c)];
                for (std::size_t w = 0; w < words_; ++w) {
                    std::uint64_t bits = chigh[w];
                    while (bits) {
                        std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                        bits &= bits - 1;
                        if (try_recolor(l, v, kmin)) chigh[w] &= ~(std::uint64_t{1} << (v % 64));
                    }
                }
            }
            while (k > 0 && popcount_all(l.classes[static_cast<std::size_t>(k - 1)]) == 0) --k;
        }
        int t = 0;
        int color = 0;
        for (int c = 0; c < k; ++c) {
            const auto& cls = l.classes[static_cast<std::size_t>(c)];
            int emitted = 0;
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = cls[w];
                while (bits) {
                    l.order[t + emitted] = static_cast<int>(w * 64 + std::countr_zero(bits));
                    ++emitted;
                    bits &= bits - 1;
                }
            }
            if (emitted == 0) continue; // recoloring emptied a middle class
            ++color;
            for (int i = 0; i < emitted; ++i) l.color[t + i] = color;
            t += emitted;
        }
        return t;
    }

    bool try_recolor(Level& l, std::size_t v, int kmin) {
        const std::uint64_t* vrow = &rows_[v * words_];
        for (int k1 = 0; k1 + 1 < kmin; ++k1) {
            auto& c1 = l.classes[static_cast<std::size_t>(k1)];
            int w_idx = -1;
            bool single = true;
            for (std::size_t w = 0; w < words_ && single; ++w) {
                std::uint64_t conflict = c1[w] & vrow[w];
                while (conflict) {
                    if (w_idx >= 0) { single = false; break; }
                    w_idx = static_cast<int>(w * 64 + std::countr_zero(conflict));
                    conflict &= conflict - 1;
                }
            }
            if (!single) continue;
            if (w_idx < 0) { // v fits k1 outright
                c1[v / 64] |= std::uint64_t{1} << (v % 64);
                return true;
            }
            for (int k2 = k1 + 1; k2 < kmin; ++k2) {
                auto& c2 = l.classes[static_cast<std::size_t>(k2)];
                if (!disjoint_row(c2, static_cast<std::size_t>(w_idx))) continue;
                clear_bit(c1, static_cast<std::size_t>(w_idx));
                c2[static_cast<std::size_t>(w_idx) / 64] |=
                    std::uint64_t{1} << (static_cast<std::size_t>(w_idx) % 64);
                c1[v / 64] |= std::uint64_t{1} << (v % 64);
                return true;
            }
        }
        return false;
    }

    void expand_max(std::size_t depth, int size) {
        ++nodes_;
        Level& l = level(depth);
        if (size + popcount_all(l.cand) <= best_) return;
        int t = color_sort(l, best_ - size);
        if (t == 0) {
            if (size > best_) best_ = size;
            return;
        }
        Level& child = level(depth + 1);
        for (int idx = t - 1; idx >= 0; --idx) {
            if (size + l.color[idx] <= best_) return;
            auto v = static_cast<std::size_t>(l.order[idx]);
            intersect_neighbors(l.cand, v, child.cand);
            expand_max(depth + 1, size + 1);
            clear_bit(l.cand, v);
        }
    }

    bool expand_exists(std::size_t depth, int size, int target) {
        ++nodes_;
        if (size >= target) return true;
        Level& l = level(depth);
        if (size + popcount_all(l.cand) < target) return false;
        int t = color_sort(l, target - 1 - size);
        Level& child = level(depth + 1);
        for (int idx = t - 1; idx >= 0; --idx) {
            if (size + l.color[idx] < target) return false;
            auto v = static_cast<std::size_t>(l.order[idx]);
            if (size + 1 >= target) return true;
            intersect_neighbors(l.cand, v, child.cand);
            if (expand_exists(depth + 1, size + 1, target)) return true;
            clear_bit(l.cand, v);
        }
        return false;
    }

    std::size_t m_, words_;
    std::vector<std::uint64_t> rows_;
    std::deque<Level> levels_; // stable references while the recursion grows it
    int best_ = 0;
    std::uint64_t nodes_ = 0;
};

// Star sizes over every element; (0,0) for a family with empty union.
std::pair<int, std::size_t> star_peak(const Family& f) {
    int element = 0;
    std::size_t size = 0;
    for (int x = 1; x <= f.ground_size(); ++x) {
        std::uint64_t bit = element_bit(x);
        std::size_t c = 0;
        for (std::uint64_t m : f.masks())
            if (m & bit) ++c;
        if (c > size) { size = c; element = x; }
    }
    return {element, size};
}

} // namespace

std::pair<int, std::size_t> largest_star(const Family& f) {
    if (f.empty()) throw DomainError("largest_star: family is empty");
    auto [element, size] = star_peak(f);
    if (element == 0) throw DomainError("largest_star: family has an empty union");
    return {element, size};
}

SearchVerdict max_intersecting(const Family& f) {
    if (f.size() > 5000) throw SizeLimitError("max_intersecting: family exceeds 5000 members");

    // The empty set cannot appear in an intersecting subfamily, so it is
    // not a search vertex at all.
    std::vector<std::uint64_t> masks;
    masks.reserve(f.size());
    for (std::uint64_t m : f.masks())
        if (m != 0) masks.push_back(m);

    SearchVerdict verdict;
    auto [star_elem, star_size] = star_peak(f);
    verdict.largest_star_value = Rational(static_cast<std::int64_t>(star_size));
    verdict.star_element = star_elem;

    CliqueSolver solver(masks.size(), masks);
    int best = static_cast<int>(star_size);
    if (!masks.empty()) {
        best = std::max(best, solver.greedy_clique(solver.all_vertices()));
        best = solver.maximize(best);
    }
    std::uint64_t phase1_nodes = solver.nodes();
    if (std::getenv("STARLAB_TIMING")) std::fprintf(stderr, "phase1 nodes=%llu\n", (unsigned long long)phase1_nodes);
    verdict.optimum = Rational(best);
    verdict.star_property = (verdict.optimum == verdict.largest_star_value);

    // Witness: fix vertices greedily in canonical order, keeping a vertex
    // exactly when an optimum-sized clique through the prefix still exists.
    // That yields the lexicographically first optimum.
    std::vector<std::uint64_t> chosen_masks;
    if (best > 0) {
        auto cand = solver.all_vertices();
        std::vector<std::uint64_t> child(cand.size());
        int need = best;
        for (std::size_t v = 0; v < masks.size() && need > 0; ++v) {
            if (!CliqueSolver::test_bit(cand, v)) continue;
            solver.intersect_neighbors(cand, v, child);
            if (solver.exists(child, need - 1)) {
                chosen_masks.push_back(masks[v]);
                cand = child;
                --need;
            } else {
                CliqueSolver::clear_bit(cand, v);
            }
        }
        if (static_cast<int>(chosen_masks.size()) != best)
            throw std::logic_error("max_intersecting: witness reconstruction failed");
    }
    verdict.witness = Family::from_masks(f.ground_size(), std::move(chosen_masks));
    verdict.nodes_explored = solver.nodes();
    return verdict;
}

SearchVerdict fjt_verdict(int n, int r) {
    return max_intersecting(enumerate_itn(n, r));
}

} // namespace starlab
