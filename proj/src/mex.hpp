#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wythoff {

// Least non-negative integer absent from the given values (duplicates allowed).
std::uint64_t mex(std::span<const std::uint64_t> values);

// Occurrence counts of non-negative integers, supporting increments and the
// mex^p query: the least value whose count is below p (membership not
// required, a value of count 0 qualifies).
class CountTable {
public:
    void increment(std::uint64_t value);
    std::uint64_t count(std::uint64_t value) const;
    std::uint64_t mex_p(std::uint64_t p) const;

private:
    std::vector<std::uint32_t> counts_;
};

enum class MexAlgorithm : std::uint8_t { fraenkel, multiset, congruence, residue };

// A pair of sequences produced by one of the mex recurrences; all four
// algorithms share the clause y_n = x_n + m*n and reproduce the closed forms.
struct GeneratedPair {
    std::uint32_t m = 0;
    std::uint32_t p = 0;
    std::vector<std::uint64_t> x;  // indices 0..N
    std::vector<std::uint64_t> y;
    MexAlgorithm algorithm = MexAlgorithm::fraenkel;
};

// x_n = mex{x_i, y_i : i < n}, y_n = x_n + m*n (the p = 1 recurrence).
GeneratedPair generate_fraenkel(std::uint32_t m, std::uint64_t N);

// x_n = mex^p of the census of {x_j : j < n} and {y_j : 1 <= j < n}.
// y_0 is excluded from the census: the origin would otherwise be counted
// twice (x_0 = y_0 = 0), the count of 0 would reach p one step early, and
// already (m,p) = (2,3) would give the wrong x_2. This matches the pairing
// of x with y_{>0} used everywhere else in the library.
GeneratedPair generate_multiset(std::uint32_t m, std::uint32_t p, std::uint64_t N);

// x_n = mex over the finite entries among nu_i^n = x_i (when n ≡ i mod p)
// and mu_i^n = y_i (when n ≡ -i mod p) for 0 <= i < n; the infinite entries
// are simply omitted from the mex set.
GeneratedPair generate_congruence(std::uint32_t m, std::uint32_t p, std::uint64_t N);

// p interleaved chains: x_{pn} = mex{x_{pi}, y_{pi} : i < n} and, for
// 0 < l < p, x_{pn+l} = mex{x_{pi+l}, y_{p(i+1)-l} : i < n}.
GeneratedPair generate_residue(std::uint32_t m, std::uint32_t p, std::uint64_t N);

}  // namespace wythoff
