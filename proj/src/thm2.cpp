#include <algorithm>
#include <unordered_map>

#include "starlab/core_ops.hpp"
#include "starlab/labeled.hpp"
#include "starlab/rng.hpp"
#include "starlab/search.hpp"

namespace starlab {

namespace {

// Shared setup for the pair searches on ground set [n]: the 2^n - 1
// non-empty subsets in canonical order, plus one compatibility bitset per
// subset (which other subsets it intersects). n <= 6 keeps those bitsets in
// a single word.
struct PairUniverse {
    int n = 0;
    std::vector<std::uint64_t> subs;
    std::vector<std::uint64_t> compat;    // over subset indices
    std::vector<std::uint64_t> size_mask; // subset indices grouped by |s|

    explicit PairUniverse(int n_) : n(n_) {
        if (n < 1) throw DomainError("pair search: n must be at least 1");
        if (n > 6) throw SizeLimitError("pair search: n > 6 exceeds the universe guard");
        std::uint64_t total = (std::uint64_t{1} << n) - 1;
        subs.reserve(total);
        for (std::uint64_t m = 1; m <= total; ++m) subs.push_back(m);
        compat.assign(subs.size(), 0);
        for (std::size_t s = 0; s < subs.size(); ++s)
            for (std::size_t t = 0; t < subs.size(); ++t)
                if (subs[s] & subs[t]) compat[s] |= std::uint64_t{1} << t;
        size_mask.assign(static_cast<std::size_t>(n) + 1, 0);
        for (std::size_t s = 0; s < subs.size(); ++s)
            size_mask[static_cast<std::size_t>(std::popcount(subs[s]))] |= std::uint64_t{1} << s;
    }

    std::uint64_t all() const { return (subs.size() == 64) ? ~std::uint64_t{0}
                                                           : (std::uint64_t{1} << subs.size()) - 1; }

    std::uint64_t star_bits() const { // indices of subsets containing element 1
        std::uint64_t b = 0;
        for (std::size_t s = 0; s < subs.size(); ++s)
            if (subs[s] & 1) b |= std::uint64_t{1} << s;
        return b;
    }

    Family family_from_bits(std::uint64_t bits) const {
        std::vector<std::uint64_t> masks;
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            masks.push_back(subs[static_cast<std::size_t>(std::countr_zero(b))]);
        return Family::from_masks(n, std::move(masks));
    }

    Rational value_of(std::uint64_t a_bits, std::uint64_t b_bits, const WeightVector& a,
                      const WeightVector& b) const {
        Rational v;
        for (int i = 0; i <= n; ++i) {
            int ca = std::popcount(a_bits & size_mask[static_cast<std::size_t>(i)]);
            int cb = std::popcount(b_bits & size_mask[static_cast<std::size_t>(i)]);
            if (ca) v += Rational(ca) * a[i];
            if (cb) v += Rational(cb) * b[i];
        }
        return v;
    }
};

void require_valid_weights(int n, const WeightVector& a, const WeightVector& b, const char* who) {
    if (a.n() != n || b.n() != n) throw DomainError(std::string(who) + ": weight length mismatch");
    if (!check_thm2_conditions(a, b))
        throw DomainError(std::string(who) + ": weights fail the hypothesis check");
}

} // namespace

SearchVerdict max_weighted_pair_sampled(int n, const WeightVector& a, const WeightVector& b,
                                        std::uint64_t seed, int trials, SampledPairStats* stats) {
    require_valid_weights(n, a, b, "max_weighted_pair");
    if (trials < 0) throw DomainError("max_weighted_pair: negative trial count");
    PairUniverse u(n);
    SplitMix64 rng(seed);
    Rational rhs = star_rhs(a, b);

    // Sample 0 is always the star pair (S_n, S_n); it is a valid pair and
    // pins optimum >= largest_star_value.
    std::uint64_t star = u.star_bits();
    Rational best = u.value_of(star, star, a, b);
    std::uint64_t best_a = star, best_b = star;

    SampledPairStats local{};
    local.trials = trials;
    for (int t = 0; t < trials; ++t) {
        // A: canonical walk keeping each compatible subset on a coin flip.
        std::uint64_t a_bits = 0, a_compat = u.all();
        for (std::size_t s = 0; s < u.subs.size(); ++s) {
            std::uint64_t bit = std::uint64_t{1} << s;
            if ((a_compat & bit) && rng.coin()) {
                a_bits |= bit;
                a_compat &= u.compat[s];
            }
        }
        if (a_bits == 0) {
            a_bits = std::uint64_t{1} << (u.subs.size() - 1); // the full set [n]
            a_compat = u.compat[u.subs.size() - 1];
        }
        // B: any non-empty subfamily of the sets compatible with all of A.
        std::uint64_t b_bits = 0;
        for (std::uint64_t c = a_compat; c != 0; c &= c - 1)
            if (rng.coin()) b_bits |= c & (~c + 1);
        if (b_bits == 0) b_bits = std::uint64_t{1} << (u.subs.size() - 1);

        Rational v = u.value_of(a_bits, b_bits, a, b);
        if (v > rhs) ++local.rhs_violations;
        if (v > best) { best = v; best_a = a_bits; best_b = b_bits; }

        ProofTrace trace =
            thm2_proof_trace(u.family_from_bits(a_bits), u.family_from_bits(b_bits), a, b);
        if (!trace.pass) ++local.trace_failures;
    }
    if (stats) *stats = local;

    SearchVerdict verdict;
    verdict.optimum = best;
    verdict.witness_pair = {u.family_from_bits(best_a), u.family_from_bits(best_b)};
    verdict.largest_star_value = rhs;
    verdict.star_element = 1;
    verdict.star_property = (best == rhs);
    verdict.nodes_explored = static_cast<std::uint64_t>(trials) + 1;
    verdict.seed = seed;
    return verdict;
}

namespace {

SearchVerdict max_weighted_pair_exhaustive(int n, const WeightVector& a, const WeightVector& b) {
    require_valid_weights(n, a, b, "max_weighted_pair");
    if (n > 4) throw SizeLimitError("max_weighted_pair: exhaustive mode requires n <= 4");
    PairUniverse u(n);

    // For a fixed intersecting A the best B is everything compatible with
    // A, so it suffices to walk intersecting families. Signatures (member
    // counts of A and of its compatible family, per size) are all the
    // weights ever see, so families are aggregated by signature first.
    struct Sig {
        std::uint64_t count = 0;
        std::uint64_t first_a = 0; // lexicographically first family with this signature
        std::uint64_t first_b = 0;
    };
    std::unordered_map<std::uint64_t, Sig> sigs;
    std::uint64_t nodes = 0;

    auto signature = [&](const std::array<int, 7>& ca, std::uint64_t compat) {
        std::uint64_t key = 0;
        for (int i = 0; i <= n; ++i) {
            std::uint64_t cb = static_cast<std::uint64_t>(
                std::popcount(compat & u.size_mask[static_cast<std::size_t>(i)]));
            key = key * 65 + static_cast<std::uint64_t>(ca[static_cast<std::size_t>(i)]);
            key = key * 65 + cb;
        }
        return key;
    };

    std::array<int, 7> ca{};
    std::uint64_t chosen = 0;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t compat) -> void {
        if (chosen != 0) {
            ++nodes;
            auto [it, fresh] = sigs.try_emplace(signature(ca, compat));
            ++it->second.count;
            if (fresh) {
                it->second.first_a = chosen;
                it->second.first_b = compat;
            }
        }
        for (std::size_t s = start; s < u.subs.size(); ++s) {
            std::uint64_t bit = std::uint64_t{1} << s;
            if (chosen != 0 && !(compat & bit)) continue;
            chosen |= bit;
            ++ca[static_cast<std::size_t>(std::popcount(u.subs[s]))];
            self(self, s + 1, compat & u.compat[s]);
            chosen &= ~bit;
            --ca[static_cast<std::size_t>(std::popcount(u.subs[s]))];
        }
    };
    rec(rec, 0, u.all());

    Rational best;
    std::uint64_t best_a = 0, best_b = 0;
    std::uint64_t optima = 0;
    bool have = false;
    for (const auto& [key, sig] : sigs) {
        Rational v = u.value_of(sig.first_a, sig.first_b, a, b);
        if (!have || v > best) {
            have = true;
            best = v;
            best_a = sig.first_a;
            best_b = sig.first_b;
            optima = sig.count;
        } else if (v == best) {
            optima += sig.count;
            if (sig.first_a < best_a || (sig.first_a == best_a && sig.first_b < best_b)) {
                best_a = sig.first_a;
                best_b = sig.first_b;
            }
        }
    }

    SearchVerdict verdict;
    verdict.optimum = best;
    verdict.witness_pair = {u.family_from_bits(best_a), u.family_from_bits(best_b)};
    verdict.largest_star_value = star_rhs(a, b);
    verdict.star_element = 1;
    verdict.star_property = (verdict.optimum == verdict.largest_star_value);
    verdict.nodes_explored = nodes;
    verdict.optima_count = optima;
    return verdict;
}

} // namespace

SearchVerdict max_weighted_pair(int n, const WeightVector& a, const WeightVector& b,
                                const PairSearchMode& mode) {
    if (std::holds_alternative<ExhaustiveMode>(mode)) return max_weighted_pair_exhaustive(n, a, b);
    const auto& s = std::get<SampledMode>(mode);
    return max_weighted_pair_sampled(n, a, b, s.seed, s.trials, nullptr);
}

ProofTrace thm2_proof_trace(const Family& a_family, const Family& b_family, const WeightVector& a,
                            const WeightVector& b) {
    int n = a.n();
    if (b.n() != n) throw DomainError("thm2_proof_trace: weight length mismatch");
    if (a_family.ground_size() != n || b_family.ground_size() != n)
        throw DomainError("thm2_proof_trace: ground size mismatch");
    if (a_family.empty() || b_family.empty())
        throw DomainError("thm2_proof_trace: families must be non-empty");
    if (!is_intersecting(a_family)) throw DomainError("thm2_proof_trace: A is not intersecting");
    if (!are_cross_intersecting(a_family, b_family))
        throw DomainError("thm2_proof_trace: (A,B) is not cross-intersecting");

    std::vector<std::uint64_t> cnt_a(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint64_t> cnt_b(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t m : a_family.masks()) ++cnt_a[static_cast<std::size_t>(std::popcount(m))];
    for (std::uint64_t m : b_family.masks()) ++cnt_b[static_cast<std::size_t>(std::popcount(m))];
    auto b_minus_a = [&](int r) { // |B^(r) \ A^(r)|
        std::uint64_t c = 0;
        for (std::uint64_t m : b_family.masks())
            if (std::popcount(m) == r && !a_family.contains(m)) ++c;
        return c;
    };

    ProofTrace out;
    out.n = n;
    out.c.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out.c[static_cast<std::size_t>(i)] =
            Rational(static_cast<std::int64_t>(cnt_a[static_cast<std::size_t>(i)])) * a[i] +
            Rational(static_cast<std::int64_t>(cnt_b[static_cast<std::size_t>(i)])) * b[i];
    out.c0_zero = out.c[0].is_zero();

    bool all_rows = true;
    Rational pair_rhs_total;
    for (int r = 1; 2 * r <= n; ++r) {
        ProofTraceRow row;
        row.r = r;
        row.c_r = out.c[static_cast<std::size_t>(r)];
        row.c_nr = out.c[static_cast<std::size_t>(n - r)];
        std::uint64_t ar = cnt_a[static_cast<std::size_t>(r)];
        std::uint64_t bda = b_minus_a(r);
        std::uint64_t cnr = binom(n, r);

        row.a_nr_count = cnt_a[static_cast<std::size_t>(n - r)];
        row.a_nr_bound = cnr - ar - bda;
        row.b_nr_count = cnt_b[static_cast<std::size_t>(n - r)];
        row.b_nr_bound = cnr - ar;
        bool counts_ok = row.a_nr_count <= row.a_nr_bound && row.b_nr_count <= row.b_nr_bound;

        std::uint64_t ekr_cap = binom(n - 1, r - 1);
        row.ekr_bound_ok = (ar <= ekr_cap);

        Rational ar_q(static_cast<std::int64_t>(ar));
        Rational bda_q(static_cast<std::int64_t>(bda));
        Rational cnr_q(static_cast<std::int64_t>(cnr));
        Rational cap_q(static_cast<std::int64_t>(ekr_cap));

        row.pair_lhs = row.c_r + row.c_nr;
        row.pair_mid = ar_q * (a[r] + b[r]) + bda_q * b[r] +
                       Rational(static_cast<std::int64_t>(row.a_nr_bound)) * a[n - r] +
                       Rational(static_cast<std::int64_t>(row.b_nr_bound)) * b[n - r];
        // The same quantity regrouped; both forms are computed and must agree.
        Rational mid_regrouped = ar_q * (a[r] + b[r] - a[n - r] - b[n - r]) -
                                 bda_q * (a[n - r] - b[r]) + cnr_q * (a[n - r] + b[n - r]);
        Rational after_ekr =
            cap_q * (a[r] + b[r] - a[n - r] - b[n - r]) + cnr_q * (a[n - r] + b[n - r]);
        row.pair_rhs = cap_q * (a[r] + b[r]) +
                       Rational(static_cast<std::int64_t>(binom(n - 1, n - r - 1))) *
                           (a[n - r] + b[n - r]);

        bool chain_ok = row.pair_lhs <= row.pair_mid && row.pair_mid == mid_regrouped &&
                        mid_regrouped <= after_ekr && after_ekr == row.pair_rhs;

        row.half_case = (2 * r == n);
        bool half_ok = true;
        if (row.half_case) {
            row.half_lhs = out.c[static_cast<std::size_t>(r)];
            row.half_rhs = Rational(static_cast<std::int64_t>(binom(n - 1, r - 1))) * (a[r] + b[r]);
            half_ok = row.half_lhs <= row.half_rhs;
            pair_rhs_total += row.half_rhs;
        } else {
            pair_rhs_total += row.pair_rhs;
        }

        row.pass = counts_ok && row.ekr_bound_ok && chain_ok && half_ok;
        all_rows = all_rows && row.pass;
        out.rows.push_back(row);
    }

    out.c_n_cap = a[n] + b[n];
    out.c_n_ok = out.c[static_cast<std::size_t>(n)] <= out.c_n_cap;

    out.total = weighted_sum(a_family, a) + weighted_sum(b_family, b);
    Rational total_from_c;
    for (const Rational& ci : out.c) total_from_c += ci;

    out.telescoped_rhs = out.c_n_cap + pair_rhs_total;
    out.rhs = star_rhs(a, b);

    out.pass = out.c0_zero && all_rows && out.c_n_ok && total_from_c == out.total &&
               out.total <= out.telescoped_rhs && out.telescoped_rhs == out.rhs;
    return out;
}

Case2Report thm5_case2_bound(int n, int r, const Family& e) {
    if (n < 1 || n > 30) throw DomainError("thm5_case2_bound: n out of range");
    if (r < 2 || r > n + 1) throw DomainError("thm5_case2_bound: need 2 <= r <= n+1");
    if (n > 2 * r - 3) throw DomainError("thm5_case2_bound: outside the n <= 2r-3 regime");
    ClawLayout layout{n};
    auto [graph, lay] = build_tn(n);
    if (e.ground_size() != layout.ground())
        throw DomainError("thm5_case2_bound: ground size mismatch");
    for (std::uint64_t m : e.masks())
        if (std::popcount(m) != r || !graph.is_independent(m))
            throw DomainError("thm5_case2_bound: E is not a subfamily of the r-slice");
    if (!is_intersecting(e)) throw DomainError("thm5_case2_bound: E is not intersecting");

    Case2Report rep;
    rep.n = n;
    rep.r = r;
    rep.conjecture_scope = (r <= n - 1);
    rep.e_size = e.size();

    SplitX0 split = split_x0(layout, e);
    rep.e0_size = split.h0.size();
    rep.e1_size = split.h1.size();

    // Compress E_0 one index at a time (y_i to x_i), first index first.
    Family e0c = split.h0;
    for (int i = 1; i <= n; ++i) e0c = compress_shift(e0c, layout.y(i), layout.x(i));
    rep.e0c_size = e0c.size();

    std::uint64_t xn = layout.xn_bits();
    rep.proof1_ok = true;
    for (std::size_t i = 0; i < e0c.size() && rep.proof1_ok; ++i)
        for (std::size_t j = i; j < e0c.size(); ++j)
            if ((e0c.bits_at(i) & e0c.bits_at(j) & xn) == 0) { rep.proof1_ok = false; break; }
    rep.proof2_ok = true;
    for (std::uint64_t m0 : e0c.masks()) {
        for (std::uint64_t m1 : split.h1.masks())
            if ((m0 & m1 & xn) == 0) { rep.proof2_ok = false; break; }
        if (!rep.proof2_ok) break;
    }

    // Trace to [n]: X_n occupies bits 1..n of the claw ground set.
    std::vector<std::uint64_t> traces;
    traces.reserve(e0c.size());
    for (std::uint64_t m : e0c.masks()) traces.push_back((m & xn) >> 1);
    Family a_family = Family::from_masks_dedup(n, traces);
    const Family& b_family = split.h1prime;

    rep.trace_intersecting = is_intersecting(a_family);
    rep.cross_ok = are_cross_intersecting(a_family, b_family);

    // a_i = C(n-i, r-i) (zero once i > r), b_{r-1} = 1.
    std::vector<Rational> aw(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        aw[static_cast<std::size_t>(i)] = Rational(static_cast<std::int64_t>(binom(n - i, r - i)));
    std::vector<Rational> bw(static_cast<std::size_t>(n) + 1);
    if (r - 1 <= n) bw[static_cast<std::size_t>(r - 1)] = Rational(1);
    WeightVector a(n, std::move(aw));
    WeightVector b(n, std::move(bw));

    rep.chain_ok = true;
    for (int i = 0; i < std::min(r, n); ++i)
        if (!(a[i] > a[i + 1])) { rep.chain_ok = false; break; }
    for (int i = r + 1; i <= n; ++i)
        if (!a[i].is_zero()) { rep.chain_ok = false; break; }
    if (r <= n && !(a[std::min(r, n)] > Rational(0))) rep.chain_ok = false;
    rep.conditions_ok = check_thm2_conditions(a, b);

    // Fibres: every set of E_0' lands on its trace, and each trace T of
    // size i can carry at most C(n-i, r-i) sets of the slice.
    std::unordered_map<std::uint64_t, std::uint64_t> fibre;
    for (std::uint64_t t : traces) ++fibre[t];
    std::uint64_t fibre_total = 0;
    for (int i = 0; i <= std::min(r, n); ++i) {
        Case2Fibre row;
        row.i = i;
        row.cap = binom(n - i, r - i);
        row.fibres_ok = true;
        for (std::uint64_t m : a_family.masks()) {
            if (std::popcount(m) != i) continue;
            ++row.trace_count;
            std::uint64_t c = fibre[m];
            row.member_count += c;
            if (c > row.cap) row.fibres_ok = false;
        }
        fibre_total += row.member_count;
        rep.fibres.push_back(row);
    }
    rep.fibre_sum_ok = (fibre_total == e0c.size());

    rep.sum_a = weighted_sum(a_family, a);
    rep.sum_b = weighted_sum(b_family, b);
    rep.rhs = star_rhs(a, b);
    rep.e0_bound_ok = Rational(static_cast<std::int64_t>(rep.e0_size)) <= rep.sum_a;
    rep.e1_exact_ok = Rational(static_cast<std::int64_t>(rep.e1_size)) == rep.sum_b;
    rep.thm2_bound_ok = rep.sum_a + rep.sum_b <= rep.rhs;

    if (!a_family.empty() && !b_family.empty() && rep.trace_intersecting && rep.cross_ok)
        rep.trace = thm2_proof_trace(a_family, b_family, a, b);

    rep.star_size = binom(n - 1, r - 1) * (std::uint64_t{1} << (r - 1)) + binom(n - 1, r - 2);
    rep.rhs_is_star_ok = (rep.rhs == Rational(static_cast<std::int64_t>(rep.star_size)));
    rep.final_bound_ok = (rep.e_size <= rep.star_size);

    bool numeric = rep.e0c_size == rep.e0_size && rep.proof1_ok && rep.proof2_ok &&
                   rep.trace_intersecting && rep.cross_ok && rep.fibre_sum_ok &&
                   rep.e0_bound_ok && rep.e1_exact_ok && rep.thm2_bound_ok &&
                   rep.rhs_is_star_ok && rep.final_bound_ok &&
                   (!rep.trace || rep.trace->pass);
    for (const Case2Fibre& f : rep.fibres) numeric = numeric && f.fibres_ok;
    rep.pass = numeric && (!rep.conjecture_scope || (rep.chain_ok && rep.conditions_ok));
    return rep;
}

} // namespace starlab
