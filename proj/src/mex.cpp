#include "mex.hpp"

#include <stdexcept>

namespace wythoff {

std::uint64_t mex(std::span<const std::uint64_t> values) {
    // The mex is at most values.size(), so only marks below that matter.
    const std::uint64_t cap = values.size();
    std::vector<bool> seen(cap + 1, false);
    for (const std::uint64_t v : values)
        if (v <= cap) seen[v] = true;
    std::uint64_t r = 0;
    while (seen[r]) ++r;
    return r;
}

void CountTable::increment(std::uint64_t value) {
    if (value >= counts_.size()) counts_.resize(value + 1, 0);
    ++counts_[value];
}

std::uint64_t CountTable::count(std::uint64_t value) const {
    return value < counts_.size() ? counts_[value] : 0;
}

std::uint64_t CountTable::mex_p(std::uint64_t p) const {
    if (p == 0) throw std::invalid_argument("mex_p: p must be positive");
    for (std::uint64_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] < p) return i;
    return counts_.size();
}

namespace {

void check_mp(std::uint32_t m, std::uint32_t p) {
    if (m == 0 || p == 0) throw std::invalid_argument("mex generator: m, p must be positive");
}

// Reusable mex over a scratch entry list; marks are cleared after each query.
class ScratchMex {
public:
    std::uint64_t mex_of(const std::vector<std::uint64_t>& entries) {
        const std::uint64_t cap = entries.size();
        if (marks_.size() <= cap) marks_.resize(cap + 1, false);
        for (const std::uint64_t v : entries)
            if (v <= cap) marks_[v] = true;
        std::uint64_t r = 0;
        while (marks_[r]) ++r;
        for (const std::uint64_t v : entries)
            if (v <= cap) marks_[v] = false;
        return r;
    }

private:
    std::vector<bool> marks_;
};

}  // namespace

GeneratedPair generate_fraenkel(std::uint32_t m, std::uint64_t N) {
    check_mp(m, 1);
    GeneratedPair out;
    out.m = m;
    out.p = 1;
    out.algorithm = MexAlgorithm::fraenkel;
    out.x.reserve(N + 1);
    out.y.reserve(N + 1);
    std::vector<bool> seen;
    std::uint64_t cursor = 0;
    const auto mark = [&](std::uint64_t v) {
        if (v >= seen.size()) seen.resize(v + 1, false);
        seen[v] = true;
    };
    for (std::uint64_t n = 0; n <= N; ++n) {
        while (cursor < seen.size() && seen[cursor]) ++cursor;
        const std::uint64_t xn = cursor;
        const std::uint64_t yn = xn + static_cast<std::uint64_t>(m) * n;
        out.x.push_back(xn);
        out.y.push_back(yn);
        mark(xn);
        mark(yn);
    }
    return out;
}

GeneratedPair generate_multiset(std::uint32_t m, std::uint32_t p, std::uint64_t N) {
    check_mp(m, p);
    GeneratedPair out;
    out.m = m;
    out.p = p;
    out.algorithm = MexAlgorithm::multiset;
    out.x.reserve(N + 1);
    out.y.reserve(N + 1);
    CountTable xi;
    std::uint64_t cursor = 0;  // counts only grow, so mex^p never moves back
    for (std::uint64_t n = 0; n <= N; ++n) {
        while (xi.count(cursor) >= p) ++cursor;
        const std::uint64_t xn = cursor;
        const std::uint64_t yn = xn + static_cast<std::uint64_t>(m) * n;
        out.x.push_back(xn);
        out.y.push_back(yn);
        xi.increment(xn);
        if (n >= 1) xi.increment(yn);  // y_0 stays out of the census
    }
    return out;
}

GeneratedPair generate_congruence(std::uint32_t m, std::uint32_t p, std::uint64_t N) {
    check_mp(m, p);
    GeneratedPair out;
    out.m = m;
    out.p = p;
    out.algorithm = MexAlgorithm::congruence;
    out.x.reserve(N + 1);
    out.y.reserve(N + 1);
    ScratchMex scratch;
    std::vector<std::uint64_t> entries;
    for (std::uint64_t n = 0; n <= N; ++n) {
        entries.clear();
        for (std::uint64_t i = n % p; i < n; i += p) entries.push_back(out.x[i]);
        for (std::uint64_t i = (p - n % p) % p; i < n; i += p) entries.push_back(out.y[i]);
        const std::uint64_t xn = scratch.mex_of(entries);
        out.x.push_back(xn);
        out.y.push_back(xn + static_cast<std::uint64_t>(m) * n);
    }
    return out;
}

GeneratedPair generate_residue(std::uint32_t m, std::uint32_t p, std::uint64_t N) {
    check_mp(m, p);
    GeneratedPair out;
    out.m = m;
    out.p = p;
    out.algorithm = MexAlgorithm::residue;
    out.x.reserve(N + 1);
    out.y.reserve(N + 1);
    ScratchMex scratch;
    std::vector<std::uint64_t> entries;
    for (std::uint64_t j = 0; j <= N; ++j) {
        const std::uint64_t l = j % p;
        const std::uint64_t n = j / p;
        entries.clear();
        if (l == 0) {
            for (std::uint64_t i = 0; i < n; ++i) {
                entries.push_back(out.x[p * i]);
                entries.push_back(out.y[p * i]);
            }
        } else {
            for (std::uint64_t i = 0; i < n; ++i) {
                entries.push_back(out.x[p * i + l]);
                entries.push_back(out.y[p * (i + 1) - l]);
            }
        }
        const std::uint64_t xj = scratch.mex_of(entries);
        out.x.push_back(xj);
        out.y.push_back(xj + static_cast<std::uint64_t>(m) * j);
    }
    return out;
}

}  // namespace wythoff
