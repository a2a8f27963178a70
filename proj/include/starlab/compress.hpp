#ifndef STARLAB_COMPRESS_HPP
#define STARLAB_COMPRESS_HPP

#include "starlab/family.hpp"

namespace starlab {

// delta for a single element pair: replace `from` by `to` when present.
inline std::uint64_t shift_element(std::uint64_t bits, int from, int to) {
    std::uint64_t fb = element_bit(from);
    if ((bits & fb) == 0) return bits;
    return (bits & ~fb) | element_bit(to);
}

// The compression operator for that pair: a member whose shifted image is
// already in the family (or is itself) stays, otherwise it is replaced by
// the image. Membership is tested against the input family, so the result
// always has the same size.
Family compress_shift(const Family& f, int from, int to);

} // namespace starlab

#endif
