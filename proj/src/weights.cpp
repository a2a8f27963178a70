#include "starlab/weights.hpp"

#include <charconv>

namespace starlab {

WeightVector::WeightVector(int n, std::vector<Rational> w) : n_(n), w_(std::move(w)) {
    if (n < 0 || n > kMaxGround) throw DomainError("WeightVector: n out of range");
    if (w_.size() != static_cast<std::size_t>(n) + 1)
        throw DomainError("WeightVector: expected n+1 entries");
    for (const Rational& x : w_)
        if (x.is_negative()) throw DomainError("WeightVector: negative weight");
}

WeightVector WeightVector::zeros(int n) {
    return WeightVector(n, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
}

std::string WeightVector::to_text() const {
    std::string out = "n=" + std::to_string(n_) + "\n";
    for (int i = 0; i <= n_; ++i)
        out += std::to_string(i) + " " + w_[static_cast<std::size_t>(i)].to_fraction_string() + "\n";
    return out;
}

WeightVector WeightVector::parse_text(std::string_view text) {
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
        throw ParseError("weight text: expected header 'n=<n>'");
    int n = 0;
    {
        std::string_view v = line.substr(2);
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
        if (ec != std::errc() || p != v.data() + v.size() || n < 0)
            throw ParseError("weight text: bad n");
    }
    std::vector<Rational> w(static_cast<std::size_t>(n) + 1);
    std::vector<bool> seen(w.size(), false);
    while (next_line(line)) {
        if (line.empty() && pos >= text.size()) break;
        std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos) throw ParseError("weight text: expected 'i num/den'");
        int i = 0;
        auto [p, ec] = std::from_chars(line.data(), line.data() + sp, i);
        if (ec != std::errc() || p != line.data() + sp || i < 0 || i > n)
            throw ParseError("weight text: bad index");
        if (seen[static_cast<std::size_t>(i)]) throw ParseError("weight text: duplicate index");
        seen[static_cast<std::size_t>(i)] = true;
        w[static_cast<std::size_t>(i)] = Rational::parse(line.substr(sp + 1));
    }
    for (bool s : seen)
        if (!s) throw ParseError("weight text: missing index");
    return WeightVector(n, std::move(w));
}

bool check_thm2_conditions(const WeightVector& a, const WeightVector& b) {
    if (a.n() != b.n()) throw DomainError("check_thm2_conditions: length mismatch");
    int n = a.n();
    for (int i = 0; 2 * i <= n; ++i) {
        if (a[i] + b[i] < a[n - i] + b[n - i]) return false;
        if (a[n - i] < b[i]) return false;
    }
    return true;
}

Rational weighted_sum(const Family& f, const WeightVector& w) {
    if (f.ground_size() != w.n()) throw DomainError("weighted_sum: ground size mismatch");
    Rational total;
    for (std::uint64_t m : f.masks()) total += w[std::popcount(m)];
    return total;
}

Rational star_rhs(const WeightVector& a, const WeightVector& b) {
    if (a.n() != b.n()) throw DomainError("star_rhs: length mismatch");
    int n = a.n();
    Rational total;
    for (int i = 1; i <= n; ++i)
        total += Rational(static_cast<std::int64_t>(binom(n - 1, i - 1))) * (a[i] + b[i]);
    return total;
}

std::pair<WeightVector, WeightVector> proof_weights(int n, int r) {
    if (n < 0 || n > kMaxGround) throw DomainError("proof_weights: n out of range");
    if (r < 2 || r > n - 1) throw DomainError("proof_weights: requires 2 <= r <= n-1");
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= r; ++i)
        a[static_cast<std::size_t>(i)] = Rational(static_cast<std::int64_t>(binom(n - i, r - i)));
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[static_cast<std::size_t>(r - 1)] = Rational(1);
    return {WeightVector(n, std::move(a)), WeightVector(n, std::move(b))};
}

} // namespace starlab
