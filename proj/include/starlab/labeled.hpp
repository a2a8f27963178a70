#ifndef STARLAB_LABELED_HPP
#define STARLAB_LABELED_HPP

#include <span>
#include <utility>

#include "starlab/compress.hpp"
#include "starlab/family.hpp"

namespace starlab {

// The labeled universe [n] x [k]: n indices with k labels each, packed onto
// the ground set [n*k] by encode(i,j) = (i-1)*k + j. The label-1 layer
// {(1,1),...,(n,1)} plays the role of X_n.
struct LabeledUniverse {
    int n = 0;
    int k = 0;

    LabeledUniverse(int n_, int k_) : n(n_), k(k_) {
        if (n < 0 || k < 1) throw DomainError("LabeledUniverse: need n >= 0, k >= 1");
        if (n * k > kMaxGround) throw DomainError("LabeledUniverse: n*k exceeds ground cap");
    }

    int ground() const { return n * k; }
    int encode(int i, int j) const {
        if (i < 1 || i > n || j < 1 || j > k) throw DomainError("LabeledUniverse: (i,j) out of range");
        return (i - 1) * k + j;
    }
    std::pair<int, int> decode(int e) const {
        if (e < 1 || e > ground()) throw DomainError("LabeledUniverse: element out of range");
        return {(e - 1) / k + 1, (e - 1) % k + 1};
    }

    std::uint64_t xn_bits() const {
        std::uint64_t b = 0;
        for (int i = 1; i <= n; ++i) b |= element_bit(encode(i, 1));
        return b;
    }

    // True when no two elements of the set share an index.
    bool distinct_indices(std::uint64_t bits) const;
};

// L_{n,k}^(r): all r-sets of labeled elements with pairwise distinct
// indices; C(n,r) * k^r members.
Family enumerate_lnk(const LabeledUniverse& u, int r);

// delta_{i,j}: replace (i,j) by (i,1) when present. Input must have
// distinct indices (so does the output).
SetMask delta(const LabeledUniverse& u, int i, int j, const SetMask& a);

// Delta_{i,j} over a family contained in one slice L_{n,k}^(r).
Family compress_family(const LabeledUniverse& u, int i, int j, const Family& f);

// The composed compression: Delta_{i,j} applied for i = 1..n and, within
// each index, j = 2..k, first factor first. Requires an intersecting input.
Family full_compress(const LabeledUniverse& u, const Family& f);

// Same, with an explicit factor order for experimentation; the default
// order above is one fixed reading of the composition chain.
Family full_compress(const LabeledUniverse& u, const Family& f,
                     std::span<const std::pair<int, int>> order);

// { E intersect X_n : E in F }, re-encoded over ground [n] (element i is
// (i,1)); duplicate traces collapse.
Family trace_xn(const LabeledUniverse& u, const Family& f);

// Labeled text format: "n=<n> k=<k>" then one line per member, elements as
// "(i,j)" comma-separated in encode order; the empty set is "-".
std::string labeled_to_text(const LabeledUniverse& u, const Family& f);
std::pair<LabeledUniverse, Family> labeled_parse_text(std::string_view text);

} // namespace starlab

#endif
