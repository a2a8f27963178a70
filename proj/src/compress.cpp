#include "starlab/compress.hpp"

namespace starlab {

Family compress_shift(const Family& f, int from, int to) {
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) {
        std::uint64_t d = shift_element(m, from, to);
        out.push_back(d == m || f.contains(d) ? m : d);
    }
    // from_masks rejects duplicates, so |output| = |input| is enforced here.
    return Family::from_masks(f.ground_size(), std::move(out));
}

} // namespace starlab
