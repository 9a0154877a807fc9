#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wythoff {

struct Position {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    auto operator<=>(const Position&) const = default;
    std::uint64_t sum() const { return std::uint64_t(x) + y; }
};

enum class MoveClass : std::uint8_t { bishop, rook };

struct Move {
    Position target;
    MoveClass cls = MoveClass::bishop;
    bool blockable = false;
    std::uint32_t take_x = 0;  // tokens removed from each pile
    std::uint32_t take_y = 0;
};

enum class GameKind : std::uint8_t {
    blocking,        // m-Wythoff p-blocking Nim: roob options may be blocked
    blocking_l,      // blocking restricted to single-pile removals of length >= l
    modulo,          // m-bishop plus the (l, p)-rook
    shifted,         // (mp)-Wythoff Nim with a corner rectangle cut out
    shifted_choice,  // the second player fixes the shift l before the first move
    shifted_rect,    // cut rectangle with explicit base u and height v
};

// Tagged game description. Construct through the named factories, which
// validate the parameter ranges of each family.
struct Variant {
    GameKind kind = GameKind::blocking;
    std::uint32_t m = 1;
    std::uint32_t p = 1;
    std::uint32_t l = 0;
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    static Variant blocking(std::uint32_t m, std::uint32_t p);
    static Variant blocking_l(std::uint32_t m, std::uint32_t p, std::uint32_t l);
    static Variant modulo(std::uint32_t m, std::uint32_t l, std::uint32_t p);  // 0 <= l <= p
    static Variant shifted(std::uint32_t m, std::uint32_t p, std::uint32_t l);  // 0 <= l < p
    static Variant shifted_choice(std::uint32_t m, std::uint32_t p);
    static Variant shifted_rect(std::uint32_t m, std::uint32_t p, std::uint32_t u,
                                std::uint32_t v);

    // Width of the compound diagonal move: m, or m*p for the shifted family.
    std::uint32_t bishop_width() const;
    bool has_blocking() const { return kind == GameKind::blocking || kind == GameKind::blocking_l; }
    // Minimal single-pile removal length that can be blocked.
    std::uint32_t blockable_min_len() const;
    // Off-board cut: a position is off the board iff x < cut_x and y < cut_y.
    Position cut() const;

    std::string name() const;
};

bool on_board(const Variant& variant, Position pos);

// All removals (s, t) with s, t >= 0, s + t > 0 and |s - t| < m.
std::vector<Move> bishop_options(Position pos, std::uint32_t m);

// Single-pile removals of length >= m (rook moves that are not m-bishop moves).
std::vector<Move> roob_options(Position pos, std::uint32_t m);

// Single-pile removals whose length is congruent to 0..l-1 mod p (l >= 1);
// l = 0 means positive multiples of p and l = p means every length. Note
// that l = 0 and l = 1 therefore describe the same move set (residue {0}).
std::vector<Move> lp_rook_options(Position pos, std::uint32_t l, std::uint32_t p);

// The full option set of a variant at pos, deduplicated by target and sorted
// by target. Throws for off-board positions and for shifted_choice (whose
// options only exist once l has been fixed).
std::vector<Move> options(const Variant& variant, Position pos);

}  // namespace wythoff
