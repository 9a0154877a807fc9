#include "beatty.hpp"

#include <limits>
#include <stdexcept>

namespace wythoff {

namespace {

std::uint64_t to_u64(const mpz_class& z, const char* what) {
    if (z < 0 || !z.fits_ulong_p())
        throw std::overflow_error(std::string(what) + ": value does not fit in 64 bits");
    return static_cast<std::uint64_t>(z.get_ui());
}

}  // namespace

SurdRatio phi(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("phi: k must be positive");
    const mpz_class kz(static_cast<unsigned long>(k));
    return SurdRatio::make(2 - kz, 1, kz * kz + 4, 2);
}

BeattyPair::BeattyPair(std::uint32_t m, std::uint32_t p, SurdRatio alpha, SurdRatio beta)
    : m_(m), p_(p), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

BeattyPair BeattyPair::make(std::uint32_t m, std::uint32_t p) {
    if (m == 0 || p == 0) throw std::invalid_argument("BeattyPair: m and p must be positive");
    const mpz_class mp = mpz_class(m) * p;
    const mpz_class D = mp * mp + 4;
    SurdRatio alpha = SurdRatio::make(2 - mp, 1, D, 2 * mpz_class(p));
    SurdRatio beta = SurdRatio::make(2 + mp, 1, D, 2 * mpz_class(p));
    if (!(alpha < beta)) throw std::logic_error("BeattyPair: alpha < beta violated");
    // 1/alpha + 1/beta == p, checked as alpha + beta - p*alpha*beta == 0.
    const SurdRatio pz = SurdRatio::integer(p);
    if (!alpha.plus(beta).minus(pz.times(alpha).times(beta)).is_zero())
        throw std::logic_error("BeattyPair: 1/alpha + 1/beta != p");
    return BeattyPair(m, p, std::move(alpha), std::move(beta));
}

std::uint64_t BeattyPair::a(std::uint64_t n) const {
    return to_u64(alpha_.floor_scale(mpz_class(static_cast<unsigned long>(n))), "a_n");
}

std::uint64_t BeattyPair::b(std::uint64_t n) const {
    return to_u64(beta_.floor_scale(mpz_class(static_cast<unsigned long>(n))), "b_n");
}

std::uint64_t beatty_a(std::uint32_t m, std::uint32_t p, std::uint64_t n) {
    return BeattyPair::make(m, p).a(n);
}

std::uint64_t beatty_b(std::uint32_t m, std::uint32_t p, std::uint64_t n) {
    return BeattyPair::make(m, p).b(n);
}

bool CensusWindow::all_equal(std::uint64_t multiplicity) const {
    for (const std::uint64_t c : counts)
        if (c != multiplicity) return false;
    return true;
}

namespace {

CensusWindow census_counts(const std::vector<std::uint64_t>& x_values,
                           const std::vector<std::uint64_t>& y_values, std::uint64_t x_last,
                           std::uint64_t y_last) {
    CensusWindow w;
    const std::uint64_t top = std::min(x_last, y_last);
    if (top == 0) return w;  // empty window, hi = -1
    w.hi = static_cast<std::int64_t>(top) - 1;
    w.counts.assign(top, 0);
    for (const std::uint64_t v : x_values)
        if (v < top) ++w.counts[v];
    for (const std::uint64_t v : y_values)
        if (v < top) ++w.counts[v];
    return w;
}

}  // namespace

CensusWindow p_complementarity_census(const BeattyPair& pair, std::uint64_t index_bound) {
    if (index_bound == 0)
        throw std::invalid_argument("p_complementarity_census: index bound must be positive");
    std::vector<std::uint64_t> xs, ys;
    xs.reserve(index_bound + 1);
    ys.reserve(index_bound);
    for (std::uint64_t n = 0; n <= index_bound; ++n) xs.push_back(pair.a(n));
    for (std::uint64_t n = 1; n <= index_bound; ++n) ys.push_back(pair.b(n));
    return census_counts(xs, ys, xs.back(), ys.back());
}

CensusWindow census_of_sequences(const std::vector<std::uint64_t>& x,
                                 const std::vector<std::uint64_t>& y) {
    if (x.empty() || y.empty())
        throw std::invalid_argument("census_of_sequences: sequences must be non-empty");
    return census_counts(x, y, x.back(), y.back());
}

PartitionSlices partition_subsequences(const BeattyPair& pair, std::uint32_t l,
                                       std::uint64_t count) {
    const std::uint32_t p = pair.p();
    if (count == 0) throw std::invalid_argument("partition_subsequences: count must be positive");
    if (l >= p) throw std::invalid_argument("partition_subsequences: l out of range");
    PartitionSlices out;
    out.a_slice.reserve(count);
    out.b_slice.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.a_slice.push_back(pair.a(p * i + l));
    for (std::uint64_t i = 1; i <= count; ++i) out.b_slice.push_back(pair.b(p * i - l));
    for (std::uint64_t i = 1; i < count; ++i) {
        if (out.a_slice[i] <= out.a_slice[i - 1] || out.b_slice[i] <= out.b_slice[i - 1])
            throw std::logic_error("partition_subsequences: slice not strictly increasing");
    }
    return out;
}

std::uint64_t phi_index(const BeattyPair& pair, std::uint64_t n) {
    const std::uint64_t bn = pair.b(n);
    const mpz_class via_b = mpz_class(pair.p()) * bn - n;
    const mpz_class an(static_cast<unsigned long>(pair.a(n)));
    const mpz_class mp = mpz_class(pair.m()) * pair.p();
    const mpz_class numerator = an + (mp - 1) * bn;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                mpz_class(pair.m()).get_mpz_t());
    if (r != 0 || q != via_b)
        throw std::logic_error("phi_index: the two formulas disagree");
    return to_u64(via_b, "phi_index");
}

bool check_complementary_equation(const BeattyPair& pair, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("check_complementary_equation: n must be positive");
    const std::uint64_t idx = phi_index(pair, n);
    const std::uint64_t bn = pair.b(n);
    if (pair.a(idx) != bn - 1) return false;
    // Greatest-index clause: the next a-value moves past b_n - 1. For p >= 2
    // it lands exactly on b_n; for p = 1 the sequences are disjoint, so b_n
    // itself never appears in a and the strict step is all that can hold.
    const std::uint64_t next = pair.a(idx + 1);
    return pair.p() >= 2 ? next == bn : next > bn - 1;
}

bool kimberling_checks(std::uint32_t m, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("kimberling_checks: n must be positive");
    const BeattyPair pair = BeattyPair::make(m, 1);
    const std::uint64_t an = pair.a(n);
    const std::uint64_t bn = pair.b(n);
    return pair.a(bn) == an + bn && bn - 1 == pair.a(bn - n);
}

AppendixOffsets appendix_offsets(const SurdRatio& alpha, const SurdRatio& beta,
                                 std::uint32_t p) {
    if (p == 0) throw std::invalid_argument("appendix_offsets: p must be positive");
    if (alpha.is_rational() || beta.is_rational())
        throw std::invalid_argument("appendix_offsets: alpha and beta must be irrational");
    if (!(alpha < beta)) throw std::invalid_argument("appendix_offsets: requires alpha < beta");
    const SurdRatio pz = SurdRatio::integer(p);
    if (!alpha.plus(beta).minus(pz.times(alpha).times(beta)).is_zero())
        throw std::invalid_argument("appendix_offsets: 1/alpha + 1/beta != p");
    AppendixOffsets out;
    out.M = to_u64(alpha.floor_recip() + 1, "M");
    out.N = to_u64(beta.floor_recip() + 1, "N");
    if (out.M + out.N != static_cast<std::uint64_t>(p) + 1)
        throw std::logic_error("appendix_offsets: M + N != p + 1");
    if (out.N > out.M) throw std::logic_error("appendix_offsets: N > M");
    return out;
}

bool appendix_pfold_check(const SurdRatio& alpha, const SurdRatio& beta, std::uint32_t p,
                          std::uint64_t K) {
    if (K == 0) throw std::invalid_argument("appendix_pfold_check: K must be positive");
    const AppendixOffsets off = appendix_offsets(alpha, beta, p);

    std::vector<std::uint64_t> counts(K + 1, 0);
    const auto tally = [&](const SurdRatio& slope, std::uint64_t start) {
        for (std::uint64_t n = start;; ++n) {
            const std::uint64_t v =
                to_u64(slope.floor_scale(mpz_class(static_cast<unsigned long>(n))), "pfold");
            if (v > K) break;
            if (v == 0) return false;  // indices >= offset must yield positive values
            ++counts[v];
        }
        return true;
    };
    if (!tally(alpha, off.M) || !tally(beta, off.N)) return false;
    for (std::uint64_t k = 1; k <= K; ++k)
        if (counts[k] != p) return false;

    // The couples for 0 <= n < M hold exactly p + 1 zero coordinates.
    std::uint64_t zeros = 0;
    for (std::uint64_t n = 0; n < off.M; ++n) {
        if (alpha.floor_scale(mpz_class(static_cast<unsigned long>(n))) == 0) ++zeros;
        if (beta.floor_scale(mpz_class(static_cast<unsigned long>(n))) == 0) ++zeros;
    }
    return zeros == static_cast<std::uint64_t>(p) + 1;
}

}  // namespace wythoff
