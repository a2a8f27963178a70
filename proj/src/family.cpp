#include "starlab/family.hpp"

#include <algorithm>
#include <charconv>

namespace starlab {

Family::Family(int ground) : ground_(ground) {
    if (ground < 0 || ground > kMaxGround) throw DomainError("Family: ground size out of range");
}

Family Family::from_masks(int ground, std::vector<std::uint64_t> masks) {
    Family f(ground);
    std::sort(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (ground < 64 && (masks[i] >> ground) != 0)
            throw DomainError("Family: member has bit set beyond ground size");
        if (i > 0 && masks[i] == masks[i - 1])
            throw DomainError("Family: duplicate member");
    }
    f.members_ = std::move(masks);
    return f;
}

Family Family::from_masks_dedup(int ground, std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    Family f(ground);
    for (std::uint64_t m : masks)
        if (ground < 64 && (m >> ground) != 0)
            throw DomainError("Family: member has bit set beyond ground size");
    f.members_ = std::move(masks);
    return f;
}

bool Family::contains(std::uint64_t bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
}

bool Family::uniform(int r) const {
    for (std::uint64_t m : members_)
        if (std::popcount(m) != r) return false;
    return true;
}

std::string Family::to_text() const {
    std::string out = "n=" + std::to_string(ground_) + "\n";
    for (std::uint64_t m : members_) out += SetMask(m, ground_).to_text() + "\n";
    return out;
}

std::uint64_t parse_set_line(std::string_view line, int ground) {
    if (line.empty()) throw ParseError("family text: empty line (the empty set is written as '-')");
    if (line == "-") return 0;
    std::uint64_t bits = 0;
    int prev = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string_view tok = line.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int e = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), e);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError("family text: bad element '" + std::string(tok) + "'");
        if (e < 1 || e > ground)
            throw ParseError("family text: element " + std::to_string(e) + " outside ground set");
        if (e <= prev) throw ParseError("family text: elements must be strictly increasing");
        prev = e;
        bits |= element_bit(e);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return bits;
}

Family Family::parse_text(std::string_view text) {
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& out) {
        if (pos >= text.size()) return false;
        std::size_t eol = text.find('\n', pos);
        out = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        return true;
    };

    std::string_view line;
    if (!next_line(line) || !line.starts_with("n="))
        throw ParseError("family text: expected header 'n=<ground>'");
    int ground = 0;
    {
        std::string_view v = line.substr(2);
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), ground);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ParseError("family text: bad ground size");
    }

    std::vector<std::uint64_t> masks;
    while (next_line(line)) {
        if (line.empty() && pos >= text.size()) break; // tolerate one trailing newline
        masks.push_back(parse_set_line(line, ground));
    }
    try {
        return from_masks(ground, std::move(masks));
    } catch (const DomainError& e) {
        throw ParseError(std::string("family text: ") + e.what());
    }
}

} // namespace starlab
