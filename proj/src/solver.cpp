#include "solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wythoff {

OutcomeTable::OutcomeTable(Variant variant, std::uint32_t bound)
    : variant_(variant), bound_(bound) {
    grid_.assign((std::uint64_t(bound) + 1) * (bound + 1), Outcome::N);
}

Outcome OutcomeTable::at(std::uint32_t x, std::uint32_t y) const {
    if (x > bound_ || y > bound_) throw std::out_of_range("OutcomeTable::at: outside bound");
    return grid_[std::uint64_t(y) * (bound_ + 1) + x];
}

void OutcomeTable::set(std::uint32_t x, std::uint32_t y, Outcome o) {
    grid_[std::uint64_t(y) * (bound_ + 1) + x] = o;
}

std::vector<Position> OutcomeTable::pset() const {
    std::vector<Position> out;
    for (std::uint32_t y = 0; y <= bound_; ++y)
        for (std::uint32_t x = 0; x <= bound_; ++x)
            if (at(x, y) == Outcome::P) out.push_back({x, y});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr std::uint32_t kNoCell = std::numeric_limits<std::uint32_t>::max();

// Incremental index of the P cells seen so far. The anti-diagonal sweep
// appends cells with increasing x per row, increasing y per column, and
// increasing x per NE-SW diagonal, so the containers stay sorted. P cells
// per row/column are sparse for every family here (a handful per line), so
// the list scans are effectively O(1).
//
// A cell (x', y') is w-bishop reachable from (x, y) iff x' <= x, y' <= y,
// (x', y') != (x, y) and |(x - y) - (x' - y')| < w; along one diagonal the
// minimal-x P cell dominates every other, so one value per diagonal answers
// the existence query.
class PIndex {
public:
    explicit PIndex(std::uint32_t bound)
        : bound_(bound),
          rows_(bound + 1),
          cols_(bound + 1),
          diag_min_x_(2 * std::size_t(bound) + 1, kNoCell) {}

    void record(std::uint32_t x, std::uint32_t y) {
        rows_[y].push_back(x);
        cols_[x].push_back(y);
        std::uint32_t& slot = diag_min_x_[diag_index(x, y)];
        if (slot == kNoCell) slot = x;
    }

    // Any P reachable by the w-bishop (single-pile removals below w included).
    bool bishop_p(std::uint32_t x, std::uint32_t y, std::uint32_t w) const {
        const std::int64_t c = std::int64_t(x) - y;
        const std::int64_t lo = std::max<std::int64_t>(c - (w - 1), -std::int64_t(bound_));
        const std::int64_t hi = std::min<std::int64_t>(c + (w - 1), bound_);
        for (std::int64_t d = lo; d <= hi; ++d) {
            const std::uint32_t mx = diag_min_x_[std::size_t(d + bound_)];
            if (mx == kNoCell) continue;
            if (mx <= x && std::int64_t(mx) - d <= std::int64_t(y)) return true;
        }
        return false;
    }

    // Any P reachable by a compound move removing from both piles.
    bool two_pile_bishop_p(std::uint32_t x, std::uint32_t y, std::uint32_t w) const {
        const std::int64_t c = std::int64_t(x) - y;
        const std::int64_t lo = std::max<std::int64_t>(c - (w - 1), -std::int64_t(bound_));
        const std::int64_t hi = std::min<std::int64_t>(c + (w - 1), bound_);
        for (std::int64_t d = lo; d <= hi; ++d) {
            const std::uint32_t mx = diag_min_x_[std::size_t(d + bound_)];
            if (mx == kNoCell) continue;
            if (mx < x && std::int64_t(mx) - d < std::int64_t(y)) return true;
        }
        return false;
    }

    bool rook_p(std::uint32_t x, std::uint32_t y) const {
        return (!rows_[y].empty() && rows_[y].front() < x) ||
               (!cols_[x].empty() && cols_[x].front() < y);
    }

    // Any P a single-pile removal of allowed length reaches.
    template <typename LenOk>
    bool single_pile_p(std::uint32_t x, std::uint32_t y, LenOk&& allowed) const {
        for (const std::uint32_t px : rows_[y]) {
            if (px >= x) break;
            if (allowed(x - px)) return true;
        }
        for (const std::uint32_t py : cols_[x]) {
            if (py >= y) break;
            if (allowed(y - py)) return true;
        }
        return false;
    }

    // Number of single-pile removals of length >= min_len landing on P,
    // capped at cap.
    std::uint32_t long_single_pile_count(std::uint32_t x, std::uint32_t y,
                                         std::uint32_t min_len, std::uint32_t cap) const {
        std::uint32_t count = 0;
        for (const std::uint32_t px : rows_[y]) {
            if (px + min_len > x || count >= cap) break;
            ++count;
        }
        for (const std::uint32_t py : cols_[x]) {
            if (py + min_len > y || count >= cap) break;
            ++count;
        }
        return count;
    }

private:
    std::size_t diag_index(std::uint32_t x, std::uint32_t y) const {
        return std::size_t(std::int64_t(x) - y + bound_);
    }

    std::uint32_t bound_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::vector<std::uint32_t>> cols_;
    std::vector<std::uint32_t> diag_min_x_;
};

Outcome classify(const PIndex& idx, const Variant& g, std::uint32_t x, std::uint32_t y) {
    switch (g.kind) {
        case GameKind::modulo: {
            const std::uint32_t l = g.l, p = g.p;
            const auto allowed = [l, p](std::uint32_t len) {
                return l == 0 ? len % p == 0 : len % p < l;
            };
            const bool n = idx.bishop_p(x, y, g.m) || idx.single_pile_p(x, y, allowed);
            return n ? Outcome::N : Outcome::P;
        }
        case GameKind::shifted:
        case GameKind::shifted_rect: {
            const bool n = idx.bishop_p(x, y, g.bishop_width()) || idx.rook_p(x, y);
            return n ? Outcome::N : Outcome::P;
        }
        case GameKind::blocking:
        case GameKind::blocking_l: {
            // Threshold rule: N when an unblockable P option exists (compound
            // moves, or single-pile removals shorter than the blockable
            // length) or when the blockable P options outnumber the p - 1
            // announcements.
            const std::uint32_t L = g.blockable_min_len();
            if (idx.two_pile_bishop_p(x, y, g.m)) return Outcome::N;
            if (L > 1 &&
                idx.single_pile_p(x, y, [L](std::uint32_t len) { return len < L; }))
                return Outcome::N;
            const std::uint32_t c = idx.long_single_pile_count(x, y, L, g.p);
            return c <= g.p - 1 ? Outcome::P : Outcome::N;
        }
        case GameKind::shifted_choice:
            throw std::logic_error("classify: shifted_choice handled separately");
    }
    return Outcome::N;
}

}  // namespace

OutcomeTable solve(const Variant& variant, std::uint32_t bound) {
    if (bound > kMaxSolveBound) throw std::invalid_argument("solve: bound too large");

    if (variant.kind == GameKind::shifted_choice) {
        OutcomeTable T(variant, bound);
        std::vector<OutcomeTable> subs;
        subs.reserve(variant.p);
        for (std::uint32_t l = 0; l < variant.p; ++l)
            subs.push_back(solve(Variant::shifted(variant.m, variant.p, l), bound));
        for (std::uint32_t y = 0; y <= bound; ++y)
            for (std::uint32_t x = 0; x <= bound; ++x) {
                bool p = false;
                for (const OutcomeTable& S : subs)
                    if (S.at(x, y) == Outcome::P) {  // Off cells count as N for that l
                        p = true;
                        break;
                    }
                T.set(x, y, p ? Outcome::P : Outcome::N);
            }
        return T;
    }

    OutcomeTable T(variant, bound);
    PIndex idx(bound);
    // Anti-diagonal sweep: every move strictly decreases x + y, so all
    // targets are classified (and indexed) before their sources.
    for (std::uint64_t s = 0; s <= 2 * std::uint64_t(bound); ++s) {
        const std::uint32_t x_lo = s > bound ? static_cast<std::uint32_t>(s - bound) : 0;
        const std::uint32_t x_hi = static_cast<std::uint32_t>(std::min<std::uint64_t>(s, bound));
        for (std::uint32_t x = x_lo; x <= x_hi; ++x) {
            const std::uint32_t y = static_cast<std::uint32_t>(s - x);
            if (!on_board(variant, {x, y})) {
                T.set(x, y, Outcome::Off);
                continue;
            }
            const Outcome o = classify(idx, variant, x, y);
            T.set(x, y, o);
            if (o == Outcome::P) idx.record(x, y);
        }
    }
    return T;
}

std::vector<Position> pset(const Variant& variant, std::uint32_t bound) {
    return solve(variant, bound).pset();
}

ExtractedSolution extract_sequences(const OutcomeTable& table) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (d, c)
    for (std::uint32_t y = 0; y <= table.bound(); ++y)
        for (std::uint32_t x = 0; x <= table.bound(); ++x)
            if (table.at(x, y) == Outcome::P)
                pairs.emplace_back(std::max(x, y), std::min(x, y));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    ExtractedSolution out;
    out.rows.reserve(pairs.size());
    for (std::uint64_t i = 0; i < pairs.size(); ++i) {
        out.rows.push_back({i, pairs[i].second, pairs[i].first});
        if (i > 0 && pairs[i].first <= pairs[i - 1].first) out.d_strictly_increasing = false;
    }
    return out;
}

Advice advise(const OutcomeTable& table, Position pos) {
    const Variant& g = table.variant();
    if (pos.x > table.bound() || pos.y > table.bound())
        throw std::out_of_range("advise: position outside the solved bound");

    if (g.kind == GameKind::shifted_choice) {
        Advice adv;
        adv.kind = Advice::Kind::choose_l;
        adv.choose_l = 0;
        for (std::uint32_t l = 0; l < g.p; ++l) {
            const Variant sub = Variant::shifted(g.m, g.p, l);
            if (!on_board(sub, pos)) continue;
            if (solve(sub, table.bound()).at(pos.x, pos.y) == Outcome::P) {
                adv.choose_l = l;
                break;
            }
        }
        return adv;
    }

    if (!on_board(g, pos)) throw std::invalid_argument("advise: position is off board");

    const std::vector<Move> opts = options(g, pos);
    Advice adv;
    if (table.at(pos.x, pos.y) == Outcome::N) {
        std::vector<Move> blockable_p;
        for (const Move& mv : opts) {
            if (table.at(mv.target.x, mv.target.y) != Outcome::P) continue;
            if (!mv.blockable) {
                adv.kind = Advice::Kind::winning_move;
                adv.move = mv;
                return adv;
            }
            blockable_p.push_back(mv);
        }
        // No unblockable P option, so this N position rests on the blocking
        // threshold: more blockable P options than the opponent can block.
        adv.kind = Advice::Kind::blocked_win;
        adv.block_set = std::move(blockable_p);
        return adv;
    }

    if (g.has_blocking()) {
        adv.kind = Advice::Kind::announce_blocks;
        for (const Move& mv : opts)
            if (mv.blockable && table.at(mv.target.x, mv.target.y) == Outcome::P)
                adv.block_set.push_back(mv);
        return adv;
    }
    adv.kind = Advice::Kind::no_winning_move;
    return adv;
}

}  // namespace wythoff
