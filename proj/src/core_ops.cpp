#include "starlab/core_ops.hpp"

#include <numeric>

namespace starlab {

Family power_set(int n) {
    if (n < 0) throw DomainError("power_set: n must be non-negative");
    if (n > 20) throw SizeLimitError("power_set: n > 20 (2^n members)");
    std::vector<std::uint64_t> masks(std::size_t{1} << n);
    std::iota(masks.begin(), masks.end(), std::uint64_t{0});
    Family f(n);
    return Family::from_masks(n, std::move(masks));
}

Family k_subsets(int n, int r) {
    if (n < 0 || n > kMaxGround) throw DomainError("k_subsets: n out of range");
    if (r < 0) throw DomainError("k_subsets: r must be non-negative");
    if (r > n) return Family(n);
    if (binom(n, r) > kMaxFamilyMembers)
        throw SizeLimitError("k_subsets: C(n,r) exceeds the enumeration guard");
    std::vector<std::uint64_t> masks;
    masks.reserve(binom(n, r));
    // Gosper's hack walks the r-subsets in increasing numeric order.
    if (r == 0) {
        masks.push_back(0);
    } else {
        std::uint64_t v = (std::uint64_t{1} << r) - 1;
        std::uint64_t limit = std::uint64_t{1} << n;
        while (v < limit) {
            masks.push_back(v);
            std::uint64_t t = v | (v - 1);
            v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        }
    }
    return Family::from_masks(n, std::move(masks));
}

Family slice(const Family& f, int r) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks())
        if (std::popcount(m) == r) out.push_back(m);
    return Family::from_masks(f.ground_size(), std::move(out));
}

Family star(const Family& f, int x) {
    if (x < 1 || x > f.ground_size()) throw DomainError("star: element outside ground set");
    std::uint64_t bit = element_bit(x);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : f.masks())
        if (m & bit) out.push_back(m);
    return Family::from_masks(f.ground_size(), std::move(out));
}

bool is_intersecting(const Family& f) {
    const auto ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0) return false; // the empty set does not intersect itself
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if ((ms[i] & ms[j]) == 0) return false;
    }
    return true;
}

bool are_cross_intersecting(const Family& a, const Family& b) {
    if (a.ground_size() != b.ground_size())
        throw DomainError("are_cross_intersecting: ground sizes differ");
    for (std::uint64_t x : a.masks())
        for (std::uint64_t y : b.masks())
            if ((x & y) == 0) return false;
    return true;
}

} // namespace starlab
