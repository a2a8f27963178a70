#ifndef STARLAB_MASK_HPP
#define STARLAB_MASK_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "starlab/binom.hpp"
#include "starlab/errors.hpp"

namespace starlab {

// A subset of the ground set [n], n <= 62. Element e (1-based) lives at bit
// e-1; the 1-based/0-based conversion happens only here and in parsing.
struct SetMask {
    std::uint64_t bits = 0;
    int ground = 0;

    SetMask() = default;
    SetMask(std::uint64_t b, int n) : bits(b), ground(n) {
        if (n < 0 || n > kMaxGround) throw DomainError("SetMask: ground size out of range");
        if (n < 64 && (b >> n) != 0) throw DomainError("SetMask: bit set beyond ground size");
    }

    static SetMask of(int ground, std::initializer_list<int> elems) {
        std::uint64_t b = 0;
        for (int e : elems) {
            if (e < 1 || e > ground) throw DomainError("SetMask: element out of range");
            b |= std::uint64_t{1} << (e - 1);
        }
        return SetMask(b, ground);
    }

    static SetMask empty(int ground) { return SetMask(0, ground); }
    static SetMask full(int ground) {
        return SetMask(ground == 0 ? 0 : (~std::uint64_t{0} >> (64 - ground)), ground);
    }

    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool contains(int e) const { return e >= 1 && e <= ground && (bits >> (e - 1)) & 1; }

    bool intersects(const SetMask& o) const { return (bits & o.bits) != 0; }
    bool subset_of(const SetMask& o) const { return (bits & ~o.bits) == 0; }

    SetMask with(int e) const {
        if (e < 1 || e > ground) throw DomainError("SetMask: element out of range");
        return SetMask(bits | (std::uint64_t{1} << (e - 1)), ground);
    }
    SetMask without(int e) const {
        if (e < 1 || e > ground) throw DomainError("SetMask: element out of range");
        return SetMask(bits & ~(std::uint64_t{1} << (e - 1)), ground);
    }

    // Elements as "1,2,5"; the empty set prints as "-" (an empty line is
    // reserved/forbidden in the family text format).
    std::string to_text() const {
        if (bits == 0) return "-";
        std::string out;
        for (std::uint64_t b = bits; b != 0; b &= b - 1) {
            if (!out.empty()) out += ',';
            out += std::to_string(std::countr_zero(b) + 1);
        }
        return out;
    }

    friend bool operator==(const SetMask&, const SetMask&) = default;
};

inline std::uint64_t element_bit(int e) { return std::uint64_t{1} << (e - 1); }

} // namespace starlab

#endif
