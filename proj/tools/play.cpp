#include "play.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

namespace {

struct Pos {
    std::uint32_t x = 0, y = 0;
    bool operator==(const Pos&) const = default;
    bool operator<(const Pos& o) const { return x < o.x || (x == o.x && y < o.y); }
};

std::string pos_str(Pos p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

class Session {
public:
    Session(const PlayConfig& cfg, std::istream& in, std::ostream& out)
        : cfg_(cfg), in_(in), out_(out) {}
    ~Session() {
        wythoff_table_destroy(table_);
        wythoff_variant_destroy(variant_);
    }

    int run();

private:
    bool setup();
    std::vector<wythoff_move> legal_moves(Pos pos) const;
    bool engine_announce_blocks(Pos pos);
    bool human_turn(Pos& pos, const std::set<Pos>& blocked, bool& quit);
    void collect_human_blocks(Pos pos, std::set<Pos>& blocked);
    bool engine_turn(Pos& pos, const std::set<Pos>& blocked);
    void show_board(Pos pos) const;
    std::optional<std::string> read_line();

    PlayConfig cfg_;
    std::istream& in_;
    std::ostream& out_;
    wythoff_variant* variant_ = nullptr;
    wythoff_table* table_ = nullptr;
    std::set<Pos> engine_blocks_;
};

std::optional<std::string> Session::read_line() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    return line;
}

bool Session::setup() {
    wythoff_game_kind kind = cfg_.kind;
    std::uint32_t l = cfg_.l;
    const std::uint32_t bound = std::max(cfg_.x, cfg_.y);

    if (kind == WYTHOFF_GAME_SHIFTED_CHOICE) {
        // The engine is the second player and fixes l before the first move.
        wythoff_variant* choice = nullptr;
        wythoff_table* ct = nullptr;
        if (wythoff_variant_create(kind, cfg_.m, cfg_.p, 0, 0, 0, &choice) != WYTHOFF_OK ||
            wythoff_solve(choice, bound, &ct) != WYTHOFF_OK) {
            wythoff_variant_destroy(choice);
            out_ << "error: could not set up the game\n";
            return false;
        }
        wythoff_advice adv{};
        size_t n = 0;
        wythoff_advise(ct, cfg_.x, cfg_.y, &adv, nullptr, 0, &n);
        l = adv.choose_l;
        out_ << "engine chooses l = " << l << "\n";
        wythoff_table_destroy(ct);
        wythoff_variant_destroy(choice);
        kind = WYTHOFF_GAME_SHIFTED;
    }

    if (wythoff_variant_create(kind, cfg_.m, cfg_.p, l, cfg_.u, cfg_.v, &variant_) !=
        WYTHOFF_OK) {
        out_ << "error: invalid game parameters\n";
        return false;
    }
    int on = 0;
    wythoff_variant_on_board(variant_, cfg_.x, cfg_.y, &on);
    if (!on) {
        out_ << "error: the starting position lies inside the cut rectangle\n";
        return false;
    }
    if (wythoff_solve(variant_, bound, &table_) != WYTHOFF_OK) {
        out_ << "error: could not solve the board\n";
        return false;
    }
    return true;
}

std::vector<wythoff_move> Session::legal_moves(Pos pos) const {
    size_t n = 0;
    wythoff_variant_options(variant_, pos.x, pos.y, nullptr, 0, &n);
    std::vector<wythoff_move> moves(n);
    if (n > 0) wythoff_variant_options(variant_, pos.x, pos.y, moves.data(), n, &n);
    return moves;
}

void Session::show_board(Pos pos) const {
    if (std::max(pos.x, pos.y) > 30) {
        out_ << "position: " << pos_str(pos) << "\n";
        return;
    }
    const std::uint32_t side = std::max(pos.x, pos.y);
    for (std::uint32_t row = 0; row <= side; ++row) {
        const std::uint32_t y = side - row;
        for (std::uint32_t x = 0; x <= side; ++x) {
            int on = 1;
            wythoff_variant_on_board(variant_, x, y, &on);
            char c = on ? '.' : '#';
            if (Pos{x, y} == pos) c = 'Q';
            out_ << c;
        }
        out_ << "\n";
    }
    out_ << "position: " << pos_str(pos) << "\n";
}

// Engine (previous player) announces up to p-1 blocks on the human's
// blockable options, preferring those that land on P positions.
bool Session::engine_announce_blocks(Pos pos) {
    engine_blocks_.clear();
    const std::uint32_t budget = cfg_.p - 1;
    if (budget == 0) return true;
    for (const wythoff_move& mv : legal_moves(pos)) {
        if (!mv.blockable || engine_blocks_.size() >= budget) continue;
        wythoff_outcome oc;
        if (wythoff_table_outcome(table_, mv.to_x, mv.to_y, &oc) != WYTHOFF_OK) return false;
        if (oc == WYTHOFF_OUTCOME_P) engine_blocks_.insert({mv.to_x, mv.to_y});
    }
    if (!engine_blocks_.empty()) {
        out_ << "engine blocks:";
        for (const Pos& b : engine_blocks_) out_ << " " << pos_str(b);
        out_ << "\n";
    }
    return true;
}

bool Session::human_turn(Pos& pos, const std::set<Pos>& blocked, bool& quit) {
    std::vector<wythoff_move> moves = legal_moves(pos);
    std::erase_if(moves, [&](const wythoff_move& mv) {
        return blocked.count({mv.to_x, mv.to_y}) != 0;
    });
    if (moves.empty()) {
        out_ << "you have no legal moves -- engine wins.\n";
        return false;
    }
    while (true) {
        out_ << "your move (move x y | quit)> " << std::flush;
        const auto line = read_line();
        if (!line) {
            quit = true;
            return false;
        }
        std::istringstream is(*line);
        std::string cmd;
        is >> cmd;
        if (cmd.empty()) continue;
        if (cmd == "quit") {
            quit = true;
            return false;
        }
        if (cmd != "move") {
            out_ << "commands: move x y | quit\n";
            continue;
        }
        std::int64_t tx = -1, ty = -1;
        if (!(is >> tx >> ty) || tx < 0 || ty < 0) {
            out_ << "usage: move x y\n";
            continue;
        }
        const Pos target{static_cast<std::uint32_t>(tx), static_cast<std::uint32_t>(ty)};
        if (blocked.count(target)) {
            out_ << "illegal: " << pos_str(target) << " was blocked off for this move\n";
            continue;
        }
        const auto hit = std::find_if(moves.begin(), moves.end(), [&](const wythoff_move& mv) {
            return Pos{mv.to_x, mv.to_y} == target;
        });
        if (hit == moves.end()) {
            if (target.x > pos.x || target.y > pos.y || target == pos)
                out_ << "illegal: a move must remove tokens (coordinates may not grow)\n";
            else {
                int on = 1;
                wythoff_variant_on_board(variant_, target.x, target.y, &on);
                const bool single_pile = target.x == pos.x || target.y == pos.y;
                if (!on)
                    out_ << "illegal: " << pos_str(target) << " lies inside the cut rectangle\n";
                else if (cfg_.kind == WYTHOFF_GAME_MODULO && single_pile) {
                    out_ << "illegal: a removal of length "
                         << (pos.x - target.x) + (pos.y - target.y)
                         << " has the wrong residue (allowed lengths: ";
                    if (cfg_.l == 0)
                        out_ << "multiples of " << cfg_.p << ")\n";
                    else
                        out_ << "0.." << cfg_.l - 1 << " mod " << cfg_.p << ")\n";
                }
                else
                    out_ << "illegal: " << pos_str(target)
                         << " is not reachable with this game's move types\n";
            }
            continue;
        }
        pos = target;
        out_ << "you move to " << pos_str(pos) << "\n";
        return true;
    }
}

void Session::collect_human_blocks(Pos pos, std::set<Pos>& blocked) {
    blocked.clear();
    const std::uint32_t budget = cfg_.p - 1;
    if (budget == 0) return;
    std::set<Pos> blockable;
    for (const wythoff_move& mv : legal_moves(pos))
        if (mv.blockable) blockable.insert({mv.to_x, mv.to_y});
    if (blockable.empty()) return;
    out_ << "you may block up to " << budget << " option(s)\n";
    while (blocked.size() < budget) {
        out_ << "your block (block x y | done)> " << std::flush;
        const auto line = read_line();
        if (!line) return;
        std::istringstream is(*line);
        std::string cmd;
        is >> cmd;
        if (cmd.empty()) continue;
        if (cmd == "done" || cmd == "pass") return;
        if (cmd != "block") {
            out_ << "commands: block x y | done\n";
            continue;
        }
        std::int64_t bx = -1, by = -1;
        if (!(is >> bx >> by) || bx < 0 || by < 0) {
            out_ << "usage: block x y\n";
            continue;
        }
        const Pos b{static_cast<std::uint32_t>(bx), static_cast<std::uint32_t>(by)};
        if (!blockable.count(b)) {
            out_ << "illegal: " << pos_str(b) << " is not a blockable option here\n";
            continue;
        }
        if (!blocked.insert(b).second) out_ << "already blocked\n";
    }
}

bool Session::engine_turn(Pos& pos, const std::set<Pos>& blocked) {
    std::vector<wythoff_move> moves = legal_moves(pos);
    std::erase_if(moves, [&](const wythoff_move& mv) {
        return blocked.count({mv.to_x, mv.to_y}) != 0;
    });
    if (moves.empty()) {
        out_ << "engine has no legal moves -- you win!\n";
        return false;
    }
    // Prefer a surviving P option; otherwise the first legal move.
    const wythoff_move* pick = nullptr;
    for (const wythoff_move& mv : moves) {
        wythoff_outcome oc;
        if (wythoff_table_outcome(table_, mv.to_x, mv.to_y, &oc) != WYTHOFF_OK) return false;
        if (oc == WYTHOFF_OUTCOME_P) {
            pick = &mv;
            break;
        }
    }
    if (!pick) pick = &moves.front();
    pos = {pick->to_x, pick->to_y};
    out_ << "engine moves to " << pos_str(pos) << "\n";
    return true;
}

int Session::run() {
    if (!setup()) return 2;
    Pos pos{cfg_.x, cfg_.y};
    out_ << "game: ";
    {
        // A short label assembled from the parameters.
        out_ << "m=" << cfg_.m << " p=" << cfg_.p;
        if (cfg_.kind == WYTHOFF_GAME_BLOCKING_L || cfg_.kind == WYTHOFF_GAME_MODULO ||
            cfg_.kind == WYTHOFF_GAME_SHIFTED)
            out_ << " l=" << cfg_.l;
        if (cfg_.kind == WYTHOFF_GAME_SHIFTED_RECT)
            out_ << " u=" << cfg_.u << " v=" << cfg_.v;
        out_ << "\n";
    }
    const bool blocking =
        cfg_.kind == WYTHOFF_GAME_BLOCKING || cfg_.kind == WYTHOFF_GAME_BLOCKING_L;

    bool quit = false;
    while (true) {
        show_board(pos);
        if (blocking) {
            if (!engine_announce_blocks(pos)) return 1;
        }
        if (!human_turn(pos, engine_blocks_, quit)) break;

        std::set<Pos> human_blocks;
        if (blocking) collect_human_blocks(pos, human_blocks);
        if (!engine_turn(pos, human_blocks)) break;
    }
    if (quit) out_ << "goodbye.\n";
    return 0;
}

}  // namespace

int run_play(const PlayConfig& config, std::istream& in, std::ostream& out) {
    Session s(config, in, out);
    return s.run();
}

}  // namespace cli
