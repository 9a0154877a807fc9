#pragma once

#include <cstdint>
#include <vector>

#include "surd.hpp"

namespace wythoff {

// phi_k = (2 - k + sqrt(k^2 + 4)) / 2; phi_1 is the golden ratio and the
// values decrease strictly toward 1 as k grows.
SurdRatio phi(std::uint64_t k);

// The (m, p) parameter pair with its derived constants:
//   alpha = phi_{mp} / p          (slope of a)
//   beta  = (phi_{mp} + mp) / p   (slope of b, equals alpha + m)
// Construction verifies 1/alpha + 1/beta = p and 0 < alpha < beta exactly.
class BeattyPair {
public:
    static BeattyPair make(std::uint32_t m, std::uint32_t p);

    std::uint32_t m() const { return m_; }
    std::uint32_t p() const { return p_; }
    const SurdRatio& alpha() const { return alpha_; }
    const SurdRatio& beta() const { return beta_; }

    // a_n = floor(n * alpha), b_n = floor(n * beta); both exact.
    std::uint64_t a(std::uint64_t n) const;
    std::uint64_t b(std::uint64_t n) const;

private:
    BeattyPair(std::uint32_t m, std::uint32_t p, SurdRatio alpha, SurdRatio beta);

    std::uint32_t m_, p_;
    SurdRatio alpha_, beta_;
};

std::uint64_t beatty_a(std::uint32_t m, std::uint32_t p, std::uint64_t n);
std::uint64_t beatty_b(std::uint32_t m, std::uint32_t p, std::uint64_t n);

// Occurrence counts of each value in [0, hi] among {a_n : 0 <= n <= I} and
// {b_n : 1 <= n <= I}; b_0 is never counted. The window top
// hi = min(a_I, b_I) - 1 is the largest value all of whose occurrences are
// guaranteed to come from indices <= I; hi may be -1 (empty window).
struct CensusWindow {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::vector<std::uint64_t> counts;  // counts[v] for lo <= v <= hi

    bool all_equal(std::uint64_t multiplicity) const;
};

CensusWindow p_complementarity_census(const BeattyPair& pair, std::uint64_t index_bound);

// Census of two explicitly given non-decreasing sequences; every element of
// both counts, the window is [0, min(last x, last y) - 1].
CensusWindow census_of_sequences(const std::vector<std::uint64_t>& x,
                                 const std::vector<std::uint64_t>& y);

// The subsequences (a_{p i + l})_{0 <= i < count} and (b_{p i - l})_{1 <= i <= count};
// each strictly increasing, and together they cover the safe window exactly once.
struct PartitionSlices {
    std::vector<std::uint64_t> a_slice;
    std::vector<std::uint64_t> b_slice;
};

PartitionSlices partition_subsequences(const BeattyPair& pair, std::uint32_t l,
                                       std::uint64_t count);

// phi_n = p*b_n - n, cross-checked against (a_n + (mp-1)*b_n)/m which must
// divide exactly; a mismatch throws std::logic_error.
std::uint64_t phi_index(const BeattyPair& pair, std::uint64_t n);

// a_{phi_n} == b_n - 1, with phi_n the greatest such index: a_{phi_n + 1}
// moves strictly past b_n - 1 (and equals b_n whenever p >= 2).
bool check_complementary_equation(const BeattyPair& pair, std::uint64_t n);

// p = 1 identities: a_{b_n} = a_n + b_n and b_n - 1 = a_{b_n - n}.
bool kimberling_checks(std::uint32_t m, std::uint64_t n);

// M = floor(1/alpha) + 1 and N = floor(1/beta) + 1 for an irrational pair
// with 1/alpha + 1/beta = p and alpha < beta; asserts M + N = p + 1 and
// N <= M.
struct AppendixOffsets {
    std::uint64_t M = 0;
    std::uint64_t N = 0;
};

AppendixOffsets appendix_offsets(const SurdRatio& alpha, const SurdRatio& beta,
                                 std::uint32_t p);

// Every integer in [1, K] occurs with total multiplicity exactly p in the
// multisets {floor(n*alpha)}_{n >= M} and {floor(n*beta)}_{n >= N}, and the
// couples (floor(n*alpha), floor(n*beta)) for 0 <= n < M carry exactly p + 1
// zero coordinates in total.
bool appendix_pfold_check(const SurdRatio& alpha, const SurdRatio& beta, std::uint32_t p,
                          std::uint64_t K);

}  // namespace wythoff
