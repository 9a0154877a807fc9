#pragma once

#include <cstdint>
#include <iosfwd>

#include "wythoff.h"

namespace cli {

struct PlayConfig {
    wythoff_game_kind kind = WYTHOFF_GAME_BLOCKING;
    std::uint32_t m = 1, p = 1, l = 0, u = 0, v = 0;
    std::uint32_t x = 0, y = 0;  // starting position; the human moves first
};

// Line-based REPL against the optimal engine. The human is the first player;
// the engine takes the previous player's role (it blocks first in blocking
// games and fixes l in the choice game). Returns the process exit code.
int run_play(const PlayConfig& config, std::istream& in, std::ostream& out);

}  // namespace cli
