#ifndef STARLAB_FAMILY_HPP
#define STARLAB_FAMILY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starlab/mask.hpp"

namespace starlab {

// Enumeration blowup guard shared by all generators (power sets, k-subsets,
// independent sets). Returns a typed error instead of exhausting memory.
inline constexpr std::uint64_t kMaxFamilyMembers = 10'000'000;

// An immutable, duplicate-free family of subsets of [ground], members kept
// strictly increasing in numeric mask order. That order is the canonical
// order everywhere: serialization, witnesses, tie-breaking.
class Family {
public:
    Family() = default;
    explicit Family(int ground);

    // Sorts; strictly-increasing after sort is enforced (duplicates throw).
    static Family from_masks(int ground, std::vector<std::uint64_t> masks);
    // Sorts and collapses duplicates (for set-image operations).
    static Family from_masks_dedup(int ground, std::vector<std::uint64_t> masks);

    int ground_size() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    std::uint64_t bits_at(std::size_t i) const { return members_[i]; }
    SetMask member(std::size_t i) const { return SetMask(members_[i], ground_); }
    std::span<const std::uint64_t> masks() const { return members_; }

    bool contains(std::uint64_t bits) const;

    // True when every member has exactly r elements (vacuously true if empty).
    bool uniform(int r) const;

    friend bool operator==(const Family&, const Family&) = default;

    // Text format: "n=<ground>" then one member per line in canonical order.
    std::string to_text() const;
    static Family parse_text(std::string_view text);

private:
    int ground_ = 0;
    std::vector<std::uint64_t> members_;
};

// Parses one member line of the family text format ("-" or "3,5,8").
std::uint64_t parse_set_line(std::string_view line, int ground);

} // namespace starlab

#endif
