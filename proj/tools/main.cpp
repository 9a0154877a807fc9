#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "play.hpp"
#include "render.hpp"
#include "wythoff.h"

namespace {

using nlohmann::ordered_json;

constexpr std::uint32_t kDefaultMaxBound = 2000;

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

std::uint32_t bound_cap() {
    if (const char* env = std::getenv("WYTHOFF_MAX_BOUND")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::uint32_t>(v);
        usage_error("WYTHOFF_MAX_BOUND must be a positive integer");
    }
    return kDefaultMaxBound;
}

void check_status(wythoff_status st, const std::string& what) {
    if (st != WYTHOFF_OK) usage_error(what + ": " + wythoff_status_message(st));
}

// LF endings throughout; binary write keeps PPM rasters intact.
void emit(const std::string& data, const std::string& path) {
    if (path.empty() || path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) usage_error("cannot open output file: " + path);
    os.write(data.data(), static_cast<std::streamsize>(data.size()));
}

struct GameFlags {
    std::string game;
    std::uint32_t m = 1, p = 1, l = 0, u = 0, v = 0;
    bool l_set = false, u_set = false, v_set = false;
};

void add_game_flags(CLI::App* cmd, GameFlags& gf, bool with_game) {
    if (with_game)
        cmd->add_option("--game", gf.game, "game family")->required();
    cmd->add_option("--m", gf.m, "bishop width m")->required();
    cmd->add_option("--p", gf.p, "multiplicity p")->required();
    auto* lopt = cmd->add_option("--l", gf.l, "family parameter l");
    auto* uopt = cmd->add_option("--u", gf.u, "cut base u");
    auto* vopt = cmd->add_option("--v", gf.v, "cut height v");
    cmd->callback([&gf, lopt, uopt, vopt] {
        gf.l_set = lopt->count() > 0;
        gf.u_set = uopt->count() > 0;
        gf.v_set = vopt->count() > 0;
    });
}

wythoff_game_kind parse_kind(const GameFlags& gf) {
    static const std::map<std::string, wythoff_game_kind> kinds = {
        {"blocking", WYTHOFF_GAME_BLOCKING},
        {"blocking-l", WYTHOFF_GAME_BLOCKING_L},
        {"modulo", WYTHOFF_GAME_MODULO},
        {"shifted", WYTHOFF_GAME_SHIFTED},
        {"shifted-choice", WYTHOFF_GAME_SHIFTED_CHOICE},
        {"shifted-rect", WYTHOFF_GAME_SHIFTED_RECT},
    };
    const auto it = kinds.find(gf.game);
    if (it == kinds.end())
        usage_error("unknown game '" + gf.game +
                    "' (expected blocking, blocking-l, modulo, shifted, shifted-choice or "
                    "shifted-rect)");
    switch (it->second) {
        case WYTHOFF_GAME_BLOCKING_L:
        case WYTHOFF_GAME_SHIFTED:
            if (!gf.l_set) usage_error("--l is required for game '" + gf.game + "'");
            break;
        case WYTHOFF_GAME_MODULO:
            if (!gf.l_set) usage_error("--l is required for game 'modulo' (use --l 0 for the plain p-rook)");
            break;
        case WYTHOFF_GAME_SHIFTED_RECT:
            if (!gf.u_set || !gf.v_set) usage_error("--u and --v are required for 'shifted-rect'");
            break;
        default: break;
    }
    return it->second;
}

wythoff_variant* make_variant(const GameFlags& gf) {
    wythoff_variant* v = nullptr;
    const wythoff_status st =
        wythoff_variant_create(parse_kind(gf), gf.m, gf.p, gf.l, gf.u, gf.v, &v);
    check_status(st, "invalid game parameters");
    return v;
}

// ------------------------------------------------------------------ seq

int cmd_seq(std::uint32_t m, std::uint32_t p, std::uint64_t count, const std::string& format,
            const std::string& output) {
    std::vector<std::array<std::uint64_t, 4>> rows;
    for (std::uint64_t n = 0; n <= count; ++n) {
        std::uint64_t a = 0, b = 0;
        check_status(wythoff_beatty_a(m, p, n, &a), "seq");
        check_status(wythoff_beatty_b(m, p, n, &b), "seq");
        rows.push_back({n, a, b, b - a});
    }
    std::ostringstream os;
    if (format == "tsv") {
        os << "n\ta\tb\tdiff\n";
        for (const auto& r : rows) os << r[0] << "\t" << r[1] << "\t" << r[2] << "\t" << r[3] << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["m"] = m;
        j["p"] = p;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r[0]}, {"a", r[1]}, {"b", r[2]}, {"diff", r[3]}});
        os << j.dump(2) << "\n";
    } else if (format == "txt") {
        os << "  n     a     b  diff\n";
        for (const auto& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%3llu %5llu %5llu %5llu\n",
                          static_cast<unsigned long long>(r[0]),
                          static_cast<unsigned long long>(r[1]),
                          static_cast<unsigned long long>(r[2]),
                          static_cast<unsigned long long>(r[3]));
            os << buf;
        }
    } else {
        usage_error("seq supports --format tsv|json|txt");
    }
    emit(os.str(), output);
    return 0;
}

// ------------------------------------------------------------------ solve

int cmd_solve(const GameFlags& gf, std::uint32_t bound, const std::string& out_mode,
              const std::string& format, const std::string& output) {
    wythoff_variant* variant = make_variant(gf);
    wythoff_table* table = nullptr;
    check_status(wythoff_solve(variant, bound, &table), "solve");

    std::string data;
    if (out_mode == "grid") {
        if (format == "txt")
            data = cli::render_grid_txt(table);
        else if (format == "ppm")
            data = cli::render_ppm(table);
        else if (format == "svg")
            data = cli::render_svg(table);
        else
            usage_error("--out grid supports --format txt|ppm|svg");
    } else if (out_mode == "pairs") {
        size_t n = 0;
        int monotone = 1;
        wythoff_table_extract(table, nullptr, 0, &n, &monotone);
        std::vector<wythoff_solution_row> rows(n);
        if (n > 0)
            check_status(wythoff_table_extract(table, rows.data(), n, &n, &monotone), "solve");
        std::ostringstream os;
        if (format == "tsv" || format == "txt") {
            os << "n\tc\td\tdiff\n";
            for (const auto& r : rows)
                os << r.n << "\t" << r.c << "\t" << r.d << "\t" << (r.d - r.c) << "\n";
            if (!monotone) os << "# warning: larger coordinates are not strictly increasing\n";
        } else if (format == "json") {
            ordered_json j;
            j["game"] = gf.game;
            j["bound"] = bound;
            j["d_strictly_increasing"] = monotone != 0;
            j["rows"] = ordered_json::array();
            for (const auto& r : rows)
                j["rows"].push_back({{"n", r.n}, {"c", r.c}, {"d", r.d}, {"diff", r.d - r.c}});
            os << j.dump(2) << "\n";
        } else {
            usage_error("--out pairs supports --format tsv|json|txt");
        }
        data = os.str();
    } else {
        usage_error("--out must be 'pairs' or 'grid'");
    }

    wythoff_table_destroy(table);
    wythoff_variant_destroy(variant);
    emit(data, output);
    return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, std::uint32_t m, std::uint32_t p, std::uint64_t bound,
               const std::string& format, const std::string& output) {
    static const std::map<std::string, wythoff_suite> suites = {
        {"main-theorem", WYTHOFF_SUITE_MAIN_THEOREM}, {"lemmas", WYTHOFF_SUITE_LEMMAS},
        {"mex", WYTHOFF_SUITE_MEX},                   {"figures", WYTHOFF_SUITE_FIGURES},
        {"all", WYTHOFF_SUITE_ALL},
    };
    const auto it = suites.find(suite);
    if (it == suites.end())
        usage_error("unknown suite '" + suite + "' (main-theorem|lemmas|mex|figures|all)");
    wythoff_report_format fmt;
    if (format == "txt" || format == "kv")
        fmt = WYTHOFF_REPORT_KV;
    else if (format == "json")
        fmt = WYTHOFF_REPORT_JSON;
    else
        usage_error("verify supports --format txt|json");

    char* report = nullptr;
    int pass = 0;
    check_status(wythoff_verify_run(it->second, m, p, bound, fmt, &report, &pass), "verify");
    emit(report, output);
    wythoff_string_free(report);
    return pass ? 0 : 1;
}

// ------------------------------------------------------------------ explore

int cmd_explore(const GameFlags& gf, std::uint32_t bound, const std::string& format,
                const std::string& output) {
    const wythoff_game_kind kind = parse_kind(gf);
    if (kind != WYTHOFF_GAME_MODULO && kind != WYTHOFF_GAME_BLOCKING_L &&
        kind != WYTHOFF_GAME_SHIFTED_RECT)
        usage_error("explore supports --game modulo|blocking-l|shifted-rect");

    wythoff_variant* variant = make_variant(gf);
    wythoff_table* table = nullptr;
    check_status(wythoff_solve(variant, bound, &table), "explore");

    size_t n = 0;
    int monotone = 1;
    wythoff_table_extract(table, nullptr, 0, &n, &monotone);
    std::vector<wythoff_solution_row> rows(n);
    if (n > 0) check_status(wythoff_table_extract(table, rows.data(), n, &n, &monotone), "explore");

    wythoff_exploration exp{};
    check_status(wythoff_explore(table, &exp), "explore");

    std::ostringstream os;
    if (format == "tsv" || format == "txt") {
        os << "n\tc\td\tdiff\n";
        for (const auto& r : rows)
            os << r.n << "\t" << r.c << "\t" << r.d << "\t" << (r.d - r.c) << "\n";
        os << "# arithmetic-progression=" << (exp.dc_is_arithmetic ? "yes" : "no");
        if (!exp.dc_is_arithmetic) os << " first-violation=n=" << exp.ap_first_violation;
        os << "\n";
        os << "# census=" << (exp.census_pass ? "pass" : "fail") << " window-hi=" << exp.census_hi
           << "\n";
        if (exp.note[0] != '\0') os << "# note=" << exp.note << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["game"] = gf.game;
        j["m"] = gf.m;
        j["p"] = gf.p;
        if (gf.l_set) j["l"] = gf.l;
        if (gf.u_set) j["u"] = gf.u;
        if (gf.v_set) j["v"] = gf.v;
        j["bound"] = bound;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n}, {"c", r.c}, {"d", r.d}, {"diff", r.d - r.c}});
        j["dc_is_arithmetic"] = exp.dc_is_arithmetic != 0;
        if (!exp.dc_is_arithmetic) j["ap_first_violation"] = exp.ap_first_violation;
        j["census_pass"] = exp.census_pass != 0;
        j["census_window_hi"] = exp.census_hi;
        if (exp.note[0] != '\0') j["note"] = exp.note;
        os << j.dump(2) << "\n";
    } else {
        usage_error("explore supports --format tsv|json|txt");
    }

    wythoff_table_destroy(table);
    wythoff_variant_destroy(variant);
    emit(os.str(), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sequences and solvers for restricted m-Wythoff Nim variants"};
    app.require_subcommand(1);

    // seq
    auto* seq = app.add_subcommand("seq", "emit n, a_n, b_n, b_n - a_n");
    std::uint32_t seq_m = 1, seq_p = 1;
    std::uint64_t seq_count = 16;
    std::string seq_format = "tsv", seq_output;
    seq->add_option("--m", seq_m)->required();
    seq->add_option("--p", seq_p)->required();
    seq->add_option("--count", seq_count, "last index emitted");
    seq->add_option("--format", seq_format, "tsv|json|txt");
    seq->add_option("--output", seq_output, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a board and emit pairs or a grid");
    GameFlags solve_gf;
    std::uint32_t solve_bound = 50;
    std::string solve_out = "pairs", solve_format, solve_output;
    add_game_flags(solve, solve_gf, true);
    solve->add_option("--bound", solve_bound, "board bound B")->required();
    solve->add_option("--out", solve_out, "pairs|grid");
    solve->add_option("--format", solve_format, "pairs: tsv|json|txt; grid: txt|ppm|svg");
    solve->add_option("--output", solve_output);

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string verify_suite = "all", verify_format = "txt", verify_output;
    std::uint32_t verify_m = 2, verify_p = 3;
    std::uint64_t verify_bound = 60;
    verify->add_option("--suite", verify_suite, "main-theorem|lemmas|mex|figures|all");
    verify->add_option("--m", verify_m);
    verify->add_option("--p", verify_p);
    verify->add_option("--bound", verify_bound, "board bound / index bound");
    verify->add_option("--format", verify_format, "txt|json");
    verify->add_option("--output", verify_output);

    // explore
    auto* explore = app.add_subcommand("explore", "dump extracted solutions and conjecture data");
    GameFlags explore_gf;
    std::uint32_t explore_bound = 50;
    std::string explore_format = "tsv", explore_output;
    add_game_flags(explore, explore_gf, true);
    explore->add_option("--bound", explore_bound)->required();
    explore->add_option("--format", explore_format, "tsv|json|txt");
    explore->add_option("--output", explore_output);

    // play
    auto* play = app.add_subcommand("play", "interactive terminal play against the engine");
    GameFlags play_gf;
    std::uint32_t play_x = 0, play_y = 0;
    add_game_flags(play, play_gf, true);
    play->add_option("--x", play_x, "starting x")->required();
    play->add_option("--y", play_y, "starting y")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::uint32_t cap = bound_cap();

        if (seq->parsed()) return cmd_seq(seq_m, seq_p, seq_count, seq_format, seq_output);
        if (solve->parsed()) {
            if (solve_bound > cap)
                usage_error("--bound exceeds the safety cap (WYTHOFF_MAX_BOUND)");
            if (solve_format.empty()) solve_format = solve_out == "grid" ? "txt" : "tsv";
            return cmd_solve(solve_gf, solve_bound, solve_out, solve_format, solve_output);
        }
        if (verify->parsed()) {
            // The cap guards board solves; lemmas/mex take an index bound.
            const bool solves_boards = verify_suite == "main-theorem" ||
                                       verify_suite == "figures" || verify_suite == "all";
            if (solves_boards && verify_bound > cap)
                usage_error("--bound exceeds the safety cap (WYTHOFF_MAX_BOUND)");
            return cmd_verify(verify_suite, verify_m, verify_p, verify_bound, verify_format,
                              verify_output);
        }
        if (explore->parsed()) {
            if (explore_bound > cap)
                usage_error("--bound exceeds the safety cap (WYTHOFF_MAX_BOUND)");
            return cmd_explore(explore_gf, explore_bound, explore_format, explore_output);
        }
        if (play->parsed()) {
            if (std::max(play_x, play_y) > cap)
                usage_error("starting position exceeds the safety cap (WYTHOFF_MAX_BOUND)");
            cli::PlayConfig cfg;
            cfg.kind = parse_kind(play_gf);
            cfg.m = play_gf.m;
            cfg.p = play_gf.p;
            cfg.l = play_gf.l;
            cfg.u = play_gf.u;
            cfg.v = play_gf.v;
            cfg.x = play_x;
            cfg.y = play_y;
            return cli::run_play(cfg, std::cin, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
