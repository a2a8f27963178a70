#ifndef STARLAB_WEIGHTS_HPP
#define STARLAB_WEIGHTS_HPP

#include <utility>
#include <vector>

#include "starlab/family.hpp"
#include "starlab/rational.hpp"

namespace starlab {

// Non-negative rational weights w_0..w_n indexed by set size.
class WeightVector {
public:
    WeightVector(int n, std::vector<Rational> w);
    static WeightVector zeros(int n);

    int n() const { return n_; }
    const Rational& operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& entries() const { return w_; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    // Text format: "n=<n>" then n+1 lines "i num/den".
    std::string to_text() const;
    static WeightVector parse_text(std::string_view text);

private:
    int n_;
    std::vector<Rational> w_;
};

// a_i + b_i >= a_{n-i} + b_{n-i} and a_{n-i} >= b_i for every integer
// 0 <= i <= n/2.
bool check_thm2_conditions(const WeightVector& a, const WeightVector& b);

// Sum of w_{|A|} over the members of f, exactly.
Rational weighted_sum(const Family& f, const WeightVector& w);

// Weighted value of the full star { A subseteq [n] : 1 in A } under (a,b):
// sum_{i=1}^{n} C(n-1,i-1) (a_i + b_i).
Rational star_rhs(const WeightVector& a, const WeightVector& b);

// a_i = C(n-i, r-i) for i <= r (then 0), b_{r-1} = 1 (else 0). The a-chain
// is strictly decreasing down to a_r = 1 precisely because r <= n-1.
std::pair<WeightVector, WeightVector> proof_weights(int n, int r);

// One proof-replay ledger row for a size class r <= n/2 (see thm2_proof_trace).
struct ProofTraceRow {
    int r = 0;
    Rational c_r, c_nr;
    std::uint64_t a_nr_count = 0, a_nr_bound = 0;   // |A^(n-r)| <= C(n,r) - |A^(r)| - |B^(r) \ A^(r)|
    std::uint64_t b_nr_count = 0, b_nr_bound = 0;   // |B^(n-r)| <= C(n,r) - |A^(r)|
    bool ekr_bound_ok = false;                      // |A^(r)| <= C(n-1,r-1)
    Rational pair_lhs, pair_mid, pair_rhs;          // c_r + c_{n-r} <= mid <= rhs
    bool half_case = false;                         // r == n/2 with n even
    Rational half_lhs, half_rhs;                    // c_{n/2} <= C(n-1,n/2-1)(a+b)
    bool pass = false;
};

struct ProofTrace {
    int n = 0;
    std::vector<Rational> c;       // c_i = |A^(i)| a_i + |B^(i)| b_i
    bool c0_zero = false;
    std::vector<ProofTraceRow> rows;
    Rational c_n_cap;              // a_n + b_n, the bound on c_n
    bool c_n_ok = false;
    Rational total;                // sum over A of a_{|A|} + sum over B of b_{|B|}
    Rational telescoped_rhs;       // the summed right-hand sides
    Rational rhs;                  // star_rhs(a,b); telescoped_rhs must equal it
    bool pass = false;
};

} // namespace starlab

#endif
