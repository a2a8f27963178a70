#include "starlab/labeled.hpp"

#include <charconv>

#include "starlab/core_ops.hpp"

namespace starlab {

namespace {

// Members of one L_{n,k}^(r) slice have r elements on r distinct indices.
void require_lnk_slice(const LabeledUniverse& u, const Family& f, const char* who) {
    if (f.ground_size() != u.ground()) throw DomainError(std::string(who) + ": ground size mismatch");
    if (f.empty()) return;
    int r = std::popcount(f.bits_at(0));
    for (std::uint64_t m : f.masks()) {
        if (std::popcount(m) != r)
            throw DomainError(std::string(who) + ": family is not contained in one slice");
        if (!u.distinct_indices(m))
            throw DomainError(std::string(who) + ": member with repeated index");
    }
}

} // namespace

bool LabeledUniverse::distinct_indices(std::uint64_t bits) const {
    if (k == 1) return true;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t block = (bits >> ((i - 1) * k)) & ((std::uint64_t{1} << k) - 1);
        if (std::popcount(block) > 1) return false;
    }
    return true;
}

Family enumerate_lnk(const LabeledUniverse& u, int r) {
    if (r < 0) throw DomainError("enumerate_lnk: r must be non-negative");
    if (r > u.n) return Family(u.ground());
    std::uint64_t count = binom(u.n, r);
    for (int t = 0; t < r; ++t) {
        count *= static_cast<std::uint64_t>(u.k);
        if (count > kMaxFamilyMembers)
            throw SizeLimitError("enumerate_lnk: C(n,r)*k^r exceeds the enumeration guard");
    }
    std::vector<std::uint64_t> out;
    out.reserve(count);
    // For each r-set of indices, walk all k^r label assignments.
    std::vector<int> idx(static_cast<std::size_t>(r));
    auto emit_labels = [&](auto&& self, int t, std::uint64_t acc) -> void {
        if (t == r) { out.push_back(acc); return; }
        for (int j = 1; j <= u.k; ++j)
            self(self, t + 1, acc | element_bit(u.encode(idx[static_cast<std::size_t>(t)], j)));
    };
    auto choose = [&](auto&& self, int t, int lo) -> void {
        if (t == r) { emit_labels(emit_labels, 0, 0); return; }
        for (int i = lo; i <= u.n - (r - t - 1); ++i) {
            idx[static_cast<std::size_t>(t)] = i;
            self(self, t + 1, i + 1);
        }
    };
    choose(choose, 0, 1);
    return Family::from_masks(u.ground(), std::move(out));
}

SetMask delta(const LabeledUniverse& u, int i, int j, const SetMask& a) {
    if (j < 2 || j > u.k) throw DomainError("delta: label must satisfy 2 <= j <= k");
    if (i < 1 || i > u.n) throw DomainError("delta: index out of range");
    if (a.ground != u.ground()) throw DomainError("delta: ground size mismatch");
    if (!u.distinct_indices(a.bits)) throw DomainError("delta: set with repeated index");
    return SetMask(shift_element(a.bits, u.encode(i, j), u.encode(i, 1)), a.ground);
}

Family compress_family(const LabeledUniverse& u, int i, int j, const Family& f) {
    if (j < 2 || j > u.k) throw DomainError("compress_family: label must satisfy 2 <= j <= k");
    if (i < 1 || i > u.n) throw DomainError("compress_family: index out of range");
    require_lnk_slice(u, f, "compress_family");
    return compress_shift(f, u.encode(i, j), u.encode(i, 1));
}

Family full_compress(const LabeledUniverse& u, const Family& f) {
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= u.n; ++i)
        for (int j = 2; j <= u.k; ++j) order.emplace_back(i, j);
    return full_compress(u, f, order);
}

Family full_compress(const LabeledUniverse& u, const Family& f,
                     std::span<const std::pair<int, int>> order) {
    require_lnk_slice(u, f, "full_compress");
    if (!is_intersecting(f)) throw DomainError("full_compress: input family is not intersecting");
    Family g = f;
    for (auto [i, j] : order) {
        if (j < 2 || j > u.k || i < 1 || i > u.n)
            throw DomainError("full_compress: factor (i,j) out of range");
        g = compress_shift(g, u.encode(i, j), u.encode(i, 1));
    }
    return g;
}

Family trace_xn(const LabeledUniverse& u, const Family& f) {
    if (f.ground_size() != u.ground()) throw DomainError("trace_xn: ground size mismatch");
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) {
        std::uint64_t t = 0;
        for (int i = 1; i <= u.n; ++i)
            if (m & element_bit(u.encode(i, 1))) t |= element_bit(i);
        out.push_back(t);
    }
    return Family::from_masks_dedup(u.n, std::move(out));
}

std::string labeled_to_text(const LabeledUniverse& u, const Family& f) {
    if (f.ground_size() != u.ground()) throw DomainError("labeled_to_text: ground size mismatch");
    std::string out = "n=" + std::to_string(u.n) + " k=" + std::to_string(u.k) + "\n";
    for (std::uint64_t m : f.masks()) {
        if (m == 0) { out += "-\n"; continue; }
        std::string line;
        for (std::uint64_t b = m; b != 0; b &= b - 1) {
            auto [i, j] = u.decode(std::countr_zero(b) + 1);
            if (!line.empty()) line += ',';
            line += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        out += line + "\n";
    }
    return out;
}

std::pair<LabeledUniverse, Family> labeled_parse_text(std::string_view text) {
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& out) {
        if (pos >= text.size()) return false;
        std::size_t eol = text.find('\n', pos);
        out = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        return true;
    };
    auto parse_int = [](std::string_view v, const char* what) {
        int x = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || p != v.data() + v.size())
            throw ParseError(std::string("labeled text: bad ") + what);
        return x;
    };
    std::string_view line;
    if (!next_line(line) || !line.starts_with("n="))
        throw ParseError("labeled text: expected header 'n=<n> k=<k>'");
    std::size_t sp = line.find(' ');
    if (sp == std::string_view::npos || line.substr(sp + 1, 2) != "k=")
        throw ParseError("labeled text: expected header 'n=<n> k=<k>'");
    int n = parse_int(line.substr(2, sp - 2), "n");
    int k = parse_int(line.substr(sp + 3), "k");
    LabeledUniverse u(n, k);

    std::vector<std::uint64_t> masks;
    while (next_line(line)) {
        if (line.empty() && pos >= text.size()) break;
        if (line.empty()) throw ParseError("labeled text: empty line");
        if (line == "-") { masks.push_back(0); continue; }
        std::uint64_t bits = 0;
        std::size_t at = 0;
        while (at < line.size()) {
            if (line[at] != '(') throw ParseError("labeled text: expected '('");
            std::size_t comma = line.find(',', at);
            std::size_t close = line.find(')', at);
            if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
                throw ParseError("labeled text: malformed (i,j)");
            int i = parse_int(line.substr(at + 1, comma - at - 1), "index");
            int j = parse_int(line.substr(comma + 1, close - comma - 1), "label");
            bits |= element_bit(u.encode(i, j));
            at = close + 1;
            if (at < line.size()) {
                if (line[at] != ',') throw ParseError("labeled text: expected ',' between elements");
                ++at;
            }
        }
        masks.push_back(bits);
    }
    try {
        return {u, Family::from_masks(u.ground(), std::move(masks))};
    } catch (const DomainError& e) {
        throw ParseError(std::string("labeled text: ") + e.what());
    }
}

} // namespace starlab
