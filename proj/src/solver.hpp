#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rules.hpp"

namespace wythoff {

enum class Outcome : std::uint8_t {
    N = 0,    // next player to move wins
    P = 1,    // previous player wins
    Off = 2,  // inside the cut rectangle, not part of the board
};

// P/N classification of every on-board position in [0, bound]^2. Moves never
// increase a coordinate, so the table is self-contained.
class OutcomeTable {
public:
    OutcomeTable(Variant variant, std::uint32_t bound);

    const Variant& variant() const { return variant_; }
    std::uint32_t bound() const { return bound_; }

    Outcome at(std::uint32_t x, std::uint32_t y) const;
    bool is_p(std::uint32_t x, std::uint32_t y) const { return at(x, y) == Outcome::P; }
    std::vector<Position> pset() const;

    void set(std::uint32_t x, std::uint32_t y, Outcome o);

private:
    Variant variant_;
    std::uint32_t bound_;
    std::vector<Outcome> grid_;
};

inline constexpr std::uint32_t kMaxSolveBound = 16384;

// Retrograde classification, processing positions in increasing x + y.
// Blocking variants use the threshold rule: a position is P iff it has no
// unblockable P option and at most p - 1 blockable P options (the previous
// player announces those, and with p or more they cannot all be blocked off).
// shifted_choice classifies a cell P iff some l in [0, p) puts it on the
// board of the l-shifted game with outcome P there; cut cells count as N for
// that l.
OutcomeTable solve(const Variant& variant, std::uint32_t bound);

std::vector<Position> pset(const Variant& variant, std::uint32_t bound);

// Unordered P-pairs {min, max}, deduplicated and sorted by the larger
// coordinate. The larger coordinates are strictly increasing for every game
// family in scope; a violation is reported through the flag, never patched.
struct ExtractedRow {
    std::uint64_t n = 0;
    std::uint32_t c = 0;
    std::uint32_t d = 0;
};

struct ExtractedSolution {
    std::vector<ExtractedRow> rows;
    bool d_strictly_increasing = true;
};

ExtractedSolution extract_sequences(const OutcomeTable& table);

struct Advice {
    enum class Kind : std::uint8_t {
        winning_move,     // move to an unblockable P option
        blocked_win,      // too many blockable P options to block; any survivor wins
        announce_blocks,  // P position in a blocking game: the block set to declare
        no_winning_move,  // P position, nothing to recommend
        choose_l,         // shifted_choice: the shift the second player should fix
    };

    Kind kind = Kind::no_winning_move;
    std::optional<Move> move;       // winning_move
    std::vector<Move> block_set;    // blocked_win certificate / blocks to announce
    std::uint32_t choose_l = 0;     // choose_l
};

Advice advise(const OutcomeTable& table, Position pos);

}  // namespace wythoff
