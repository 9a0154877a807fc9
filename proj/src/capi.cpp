#include "wythoff.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <stdexcept>

#include "beatty.hpp"
#include "solver.hpp"
#include "verify.hpp"

struct wythoff_variant {
    wythoff::Variant v;
};

struct wythoff_table {
    wythoff::OutcomeTable t;
};

namespace {

template <typename Fn>
wythoff_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        return WYTHOFF_ERROR_INVALID_ARGUMENT;
    } catch (const std::domain_error&) {
        return WYTHOFF_ERROR_INVALID_ARGUMENT;
    } catch (const std::out_of_range&) {
        return WYTHOFF_ERROR_OUT_OF_RANGE;
    } catch (const std::overflow_error&) {
        return WYTHOFF_ERROR_OVERFLOW;
    } catch (const std::bad_alloc&) {
        return WYTHOFF_ERROR_INTERNAL;
    } catch (...) {
        return WYTHOFF_ERROR_INTERNAL;
    }
}

wythoff_move to_c_move(const wythoff::Move& mv) {
    wythoff_move out{};
    out.to_x = mv.target.x;
    out.to_y = mv.target.y;
    out.take_x = mv.take_x;
    out.take_y = mv.take_y;
    out.is_rook_class = mv.cls == wythoff::MoveClass::rook ? 1 : 0;
    out.blockable = mv.blockable ? 1 : 0;
    return out;
}

wythoff_status write_moves(const std::vector<wythoff::Move>& moves, wythoff_move* buffer,
                           size_t capacity, size_t* count) {
    *count = moves.size();
    if (moves.size() > capacity) return WYTHOFF_ERROR_BUFFER_TOO_SMALL;
    for (size_t i = 0; i < moves.size(); ++i) buffer[i] = to_c_move(moves[i]);
    return WYTHOFF_OK;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* wythoff_status_message(wythoff_status status) {
    switch (status) {
        case WYTHOFF_OK: return "ok";
        case WYTHOFF_ERROR_NULL_POINTER: return "null pointer argument";
        case WYTHOFF_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case WYTHOFF_ERROR_OUT_OF_RANGE: return "argument out of range";
        case WYTHOFF_ERROR_BUFFER_TOO_SMALL: return "buffer too small";
        case WYTHOFF_ERROR_OVERFLOW: return "result does not fit in 64 bits";
        case WYTHOFF_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* wythoff_version(void) { return "1.0.0"; }

wythoff_status wythoff_beatty_a(uint32_t m, uint32_t p, uint64_t n, uint64_t* out) {
    if (!out) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        *out = wythoff::beatty_a(m, p, n);
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_beatty_b(uint32_t m, uint32_t p, uint64_t n, uint64_t* out) {
    if (!out) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        *out = wythoff::beatty_b(m, p, n);
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_phi_index(uint32_t m, uint32_t p, uint64_t n, uint64_t* out) {
    if (!out) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        *out = wythoff::phi_index(wythoff::BeattyPair::make(m, p), n);
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_variant_create(wythoff_game_kind kind, uint32_t m, uint32_t p,
                                      uint32_t l, uint32_t u, uint32_t v,
                                      wythoff_variant** out) {
    if (!out) return WYTHOFF_ERROR_NULL_POINTER;
    *out = nullptr;
    return guarded([&] {
        wythoff::Variant variant;
        switch (kind) {
            case WYTHOFF_GAME_BLOCKING: variant = wythoff::Variant::blocking(m, p); break;
            case WYTHOFF_GAME_BLOCKING_L: variant = wythoff::Variant::blocking_l(m, p, l); break;
            case WYTHOFF_GAME_MODULO: variant = wythoff::Variant::modulo(m, l, p); break;
            case WYTHOFF_GAME_SHIFTED: variant = wythoff::Variant::shifted(m, p, l); break;
            case WYTHOFF_GAME_SHIFTED_CHOICE:
                variant = wythoff::Variant::shifted_choice(m, p);
                break;
            case WYTHOFF_GAME_SHIFTED_RECT:
                variant = wythoff::Variant::shifted_rect(m, p, u, v);
                break;
            default: return WYTHOFF_ERROR_INVALID_ARGUMENT;
        }
        *out = new wythoff_variant{variant};
        return WYTHOFF_OK;
    });
}

void wythoff_variant_destroy(wythoff_variant* variant) { delete variant; }

wythoff_status wythoff_variant_on_board(const wythoff_variant* variant, uint32_t x, uint32_t y,
                                        int* out) {
    if (!variant || !out) return WYTHOFF_ERROR_NULL_POINTER;
    *out = wythoff::on_board(variant->v, {x, y}) ? 1 : 0;
    return WYTHOFF_OK;
}

wythoff_status wythoff_variant_options(const wythoff_variant* variant, uint32_t x, uint32_t y,
                                       wythoff_move* buffer, size_t capacity, size_t* count) {
    if (!variant || !count || (capacity > 0 && !buffer)) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        const std::vector<wythoff::Move> moves = wythoff::options(variant->v, {x, y});
        return write_moves(moves, buffer, capacity, count);
    });
}

wythoff_status wythoff_solve(const wythoff_variant* variant, uint32_t bound,
                             wythoff_table** out) {
    if (!variant || !out) return WYTHOFF_ERROR_NULL_POINTER;
    *out = nullptr;
    return guarded([&] {
        *out = new wythoff_table{wythoff::solve(variant->v, bound)};
        return WYTHOFF_OK;
    });
}

void wythoff_table_destroy(wythoff_table* table) { delete table; }

wythoff_status wythoff_table_bound(const wythoff_table* table, uint32_t* out) {
    if (!table || !out) return WYTHOFF_ERROR_NULL_POINTER;
    *out = table->t.bound();
    return WYTHOFF_OK;
}

wythoff_status wythoff_table_outcome(const wythoff_table* table, uint32_t x, uint32_t y,
                                     wythoff_outcome* out) {
    if (!table || !out) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        *out = static_cast<wythoff_outcome>(table->t.at(x, y));
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_table_extract(const wythoff_table* table, wythoff_solution_row* buffer,
                                     size_t capacity, size_t* count,
                                     int* d_strictly_increasing) {
    if (!table || !count || (capacity > 0 && !buffer)) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        const wythoff::ExtractedSolution sol = wythoff::extract_sequences(table->t);
        if (d_strictly_increasing) *d_strictly_increasing = sol.d_strictly_increasing ? 1 : 0;
        *count = sol.rows.size();
        if (sol.rows.size() > capacity) return WYTHOFF_ERROR_BUFFER_TOO_SMALL;
        for (size_t i = 0; i < sol.rows.size(); ++i)
            buffer[i] = {sol.rows[i].n, sol.rows[i].c, sol.rows[i].d};
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_advise(const wythoff_table* table, uint32_t x, uint32_t y,
                              wythoff_advice* advice, wythoff_move* set_buffer,
                              size_t capacity, size_t* set_count) {
    if (!table || !advice || !set_count || (capacity > 0 && !set_buffer))
        return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        const wythoff::Advice adv = wythoff::advise(table->t, {x, y});
        *advice = wythoff_advice{};
        advice->kind = static_cast<int>(adv.kind);
        advice->choose_l = adv.choose_l;
        if (adv.move) advice->move = to_c_move(*adv.move);
        return write_moves(adv.block_set, set_buffer, capacity, set_count);
    });
}

wythoff_status wythoff_explore(const wythoff_table* table, wythoff_exploration* out) {
    if (!table || !out) return WYTHOFF_ERROR_NULL_POINTER;
    return guarded([&] {
        const wythoff::ExploreRecord rec =
            wythoff::explore(table->t.variant(), table->t.bound());
        out->dc_is_arithmetic = rec.dc_is_arithmetic ? 1 : 0;
        out->ap_first_violation = rec.ap_first_violation;
        out->census_pass = rec.census_pass ? 1 : 0;
        out->census_hi = rec.census_hi;
        std::snprintf(out->note, sizeof out->note, "%s", rec.note.c_str());
        return WYTHOFF_OK;
    });
}

wythoff_status wythoff_verify_run(wythoff_suite suite, uint32_t m, uint32_t p, uint64_t bound,
                                  wythoff_report_format format, char** report, int* all_pass) {
    if (!report || !all_pass) return WYTHOFF_ERROR_NULL_POINTER;
    *report = nullptr;
    return guarded([&] {
        std::vector<wythoff::VerificationReport> reports;
        switch (suite) {
            case WYTHOFF_SUITE_MAIN_THEOREM:
                reports.push_back(
                    wythoff::verify_main_theorem(m, p, static_cast<uint32_t>(bound)));
                break;
            case WYTHOFF_SUITE_LEMMAS:
                reports.push_back(wythoff::verify_sequence_lemmas(m, p, bound));
                break;
            case WYTHOFF_SUITE_MEX:
                reports.push_back(wythoff::verify_mex_equivalence(m, p, bound));
                break;
            case WYTHOFF_SUITE_FIGURES:
                reports.push_back(
                    wythoff::verify_figure_coincidences(static_cast<uint32_t>(bound)));
                break;
            case WYTHOFF_SUITE_ALL:
                reports = wythoff::run_all_suites(m, p, bound);
                break;
            default: return WYTHOFF_ERROR_INVALID_ARGUMENT;
        }
        bool pass = true;
        for (const auto& r : reports) pass = pass && r.pass();
        const std::string text = format == WYTHOFF_REPORT_JSON
                                     ? wythoff::serialize_json(reports)
                                     : wythoff::serialize_kv(reports);
        *report = dup_string(text);
        *all_pass = pass ? 1 : 0;
        return WYTHOFF_OK;
    });
}

void wythoff_string_free(char* s) { delete[] s; }

}  // extern "C"
