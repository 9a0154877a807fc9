#include "rules.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wythoff {

namespace {

constexpr std::uint64_t kMaxBishopWidth = 1u << 20;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Variant Variant::blocking(std::uint32_t m, std::uint32_t p) {
    require(m >= 1 && p >= 1, "blocking: m, p must be positive");
    Variant g;
    g.kind = GameKind::blocking;
    g.m = m;
    g.p = p;
    g.l = m;  // blocks apply to removals of length >= m
    return g;
}

Variant Variant::blocking_l(std::uint32_t m, std::uint32_t p, std::uint32_t l) {
    require(m >= 1 && p >= 1 && l >= 1, "blocking_l: m, p, l must be positive");
    Variant g;
    g.kind = GameKind::blocking_l;
    g.m = m;
    g.p = p;
    g.l = l;
    return g;
}

Variant Variant::modulo(std::uint32_t m, std::uint32_t l, std::uint32_t p) {
    require(m >= 1 && p >= 1, "modulo: m, p must be positive");
    require(l <= p, "modulo: l must satisfy 0 <= l <= p");
    Variant g;
    g.kind = GameKind::modulo;
    g.m = m;
    g.p = p;
    g.l = l;
    return g;
}

Variant Variant::shifted(std::uint32_t m, std::uint32_t p, std::uint32_t l) {
    require(m >= 1 && p >= 1, "shifted: m, p must be positive");
    require(l < p, "shifted: l must satisfy 0 <= l < p");
    require(std::uint64_t(m) * p <= kMaxBishopWidth, "shifted: m*p too large");
    Variant g;
    g.kind = GameKind::shifted;
    g.m = m;
    g.p = p;
    g.l = l;
    return g;
}

Variant Variant::shifted_choice(std::uint32_t m, std::uint32_t p) {
    require(m >= 1 && p >= 1, "shifted_choice: m, p must be positive");
    require(std::uint64_t(m) * p <= kMaxBishopWidth, "shifted_choice: m*p too large");
    Variant g;
    g.kind = GameKind::shifted_choice;
    g.m = m;
    g.p = p;
    return g;
}

Variant Variant::shifted_rect(std::uint32_t m, std::uint32_t p, std::uint32_t u,
                              std::uint32_t v) {
    require(m >= 1 && p >= 1 && u >= 1 && v >= 1, "shifted_rect: parameters must be positive");
    require(std::uint64_t(m) * p <= kMaxBishopWidth, "shifted_rect: m*p too large");
    Variant g;
    g.kind = GameKind::shifted_rect;
    g.m = m;
    g.p = p;
    g.u = u;
    g.v = v;
    return g;
}

std::uint32_t Variant::bishop_width() const {
    switch (kind) {
        case GameKind::shifted:
        case GameKind::shifted_choice:
        case GameKind::shifted_rect:
            return m * p;
        default:
            return m;
    }
}

std::uint32_t Variant::blockable_min_len() const {
    return has_blocking() ? l : 0;
}

Position Variant::cut() const {
    // Off-board iff x < cut.x and y < cut.y. Orientation for the shifted
    // family: cut {x < m(p-l), y < m*l}, so the minimal P-pairs sit at
    // (0, m*l) and (m(p-l), 0) in index order.
    switch (kind) {
        case GameKind::shifted:
            return l > 0 ? Position{m * (p - l), m * l} : Position{0, 0};
        case GameKind::shifted_rect:
            return Position{u, v};
        default:
            return Position{0, 0};
    }
}

std::string Variant::name() const {
    const std::string ms = std::to_string(m), ps = std::to_string(p);
    switch (kind) {
        case GameKind::blocking:
            return ms + "-Wythoff " + ps + "-blocking Nim";
        case GameKind::blocking_l:
            return ms + "-Wythoff " + ps + "-blocking Nim (blocks on lengths >= " +
                   std::to_string(l) + ")";
        case GameKind::modulo:
            return ms + "-Wythoff modulo-" + ps + " " + std::to_string(l) + "-Nim";
        case GameKind::shifted:
            return std::to_string(l) + "-shifted " + ms + "x" + ps + "-Wythoff Nim";
        case GameKind::shifted_choice:
            return ms + "x" + ps + "-Wythoff Nim";
        case GameKind::shifted_rect:
            return ms + "x" + ps + "-Wythoff Nim with a " + std::to_string(u) + "x" +
                   std::to_string(v) + " cut";
    }
    return "unknown";
}

bool on_board(const Variant& variant, Position pos) {
    const Position c = variant.cut();
    return !(pos.x < c.x && pos.y < c.y);
}

std::vector<Move> bishop_options(Position pos, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("bishop_options: m must be positive");
    std::vector<Move> out;
    for (std::uint32_t s = 0; s <= pos.x; ++s) {
        const std::uint32_t t_lo = s + 1 > m ? s + 1 - m : (s == 0 ? 1 : 0);
        const std::uint64_t t_hi = std::min<std::uint64_t>(pos.y, std::uint64_t(s) + m - 1);
        for (std::uint64_t t = t_lo; t <= t_hi; ++t) {
            Move mv;
            mv.take_x = s;
            mv.take_y = static_cast<std::uint32_t>(t);
            mv.target = {pos.x - s, pos.y - mv.take_y};
            mv.cls = MoveClass::bishop;
            mv.blockable = false;
            out.push_back(mv);
        }
    }
    return out;
}

std::vector<Move> roob_options(Position pos, std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("roob_options: m must be positive");
    std::vector<Move> out;
    for (std::uint32_t k = m; k <= pos.x; ++k)
        out.push_back({{pos.x - k, pos.y}, MoveClass::rook, true, k, 0});
    for (std::uint32_t k = m; k <= pos.y; ++k)
        out.push_back({{pos.x, pos.y - k}, MoveClass::rook, true, 0, k});
    return out;
}

std::vector<Move> lp_rook_options(Position pos, std::uint32_t l, std::uint32_t p) {
    if (p == 0) throw std::invalid_argument("lp_rook_options: p must be positive");
    if (l > p) throw std::invalid_argument("lp_rook_options: l out of range");
    const auto allowed = [&](std::uint32_t len) {
        if (l == 0) return len % p == 0;
        return len % p < l;
    };
    std::vector<Move> out;
    for (std::uint32_t k = 1; k <= pos.x; ++k)
        if (allowed(k)) out.push_back({{pos.x - k, pos.y}, MoveClass::rook, false, k, 0});
    for (std::uint32_t k = 1; k <= pos.y; ++k)
        if (allowed(k)) out.push_back({{pos.x, pos.y - k}, MoveClass::rook, false, 0, k});
    return out;
}

namespace {

// Deduplication by target. A target reachable both ways stays unblockable
// unless `blockable_wins` marks it blockable (BlockingL, where a single-pile
// removal of length >= l may be blocked even though it is m-bishop-shaped).
class MoveSet {
public:
    void add(const Move& mv, bool overwrite = false) {
        auto [it, inserted] = moves_.try_emplace(mv.target, mv);
        if (!inserted && overwrite) it->second = mv;
    }

    std::vector<Move> sorted() const {
        std::vector<Move> out;
        out.reserve(moves_.size());
        for (const auto& [_, mv] : moves_) out.push_back(mv);
        return out;
    }

private:
    std::map<Position, Move> moves_;
};

}  // namespace

std::vector<Move> options(const Variant& variant, Position pos) {
    if (!on_board(variant, pos)) throw std::invalid_argument("options: position is off board");
    MoveSet set;
    switch (variant.kind) {
        case GameKind::blocking:
        case GameKind::blocking_l: {
            const std::uint32_t L = variant.blockable_min_len();
            for (const Move& mv : bishop_options(pos, variant.m)) set.add(mv);
            // Full rook set; lengths >= L are the blockable options.
            for (const Move& mv : lp_rook_options(pos, variant.p, variant.p)) {
                Move rk = mv;
                const std::uint32_t len = rk.take_x + rk.take_y;
                rk.blockable = len >= L;
                set.add(rk, /*overwrite=*/rk.blockable);
            }
            break;
        }
        case GameKind::modulo: {
            for (const Move& mv : bishop_options(pos, variant.m)) set.add(mv);
            for (const Move& mv : lp_rook_options(pos, variant.l, variant.p)) set.add(mv);
            break;
        }
        case GameKind::shifted:
        case GameKind::shifted_rect: {
            for (const Move& mv : bishop_options(pos, variant.bishop_width()))
                if (on_board(variant, mv.target)) set.add(mv);
            for (const Move& mv : lp_rook_options(pos, variant.p, variant.p))
                if (on_board(variant, mv.target)) set.add(mv);
            break;
        }
        case GameKind::shifted_choice:
            throw std::invalid_argument("options: shifted_choice has no moves until l is chosen");
    }
    return set.sorted();
}

}  // namespace wythoff
