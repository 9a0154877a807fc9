#include "render.hpp"

#include <sstream>
#include <stdexcept>

namespace cli {

namespace {

std::uint32_t bound_of(const wythoff_table* table) {
    std::uint32_t bound = 0;
    if (wythoff_table_bound(table, &bound) != WYTHOFF_OK)
        throw std::runtime_error("render: bad table handle");
    return bound;
}

wythoff_outcome cell(const wythoff_table* table, std::uint32_t x, std::uint32_t y) {
    wythoff_outcome oc;
    if (wythoff_table_outcome(table, x, y, &oc) != WYTHOFF_OK)
        throw std::runtime_error("render: cell query failed");
    return oc;
}

}  // namespace

std::string render_grid_txt(const wythoff_table* table) {
    const std::uint32_t bound = bound_of(table);
    std::string out;
    out.reserve((std::size_t(bound) + 2) * (bound + 1));
    for (std::uint32_t row = 0; row <= bound; ++row) {
        const std::uint32_t y = bound - row;
        for (std::uint32_t x = 0; x <= bound; ++x) {
            switch (cell(table, x, y)) {
                case WYTHOFF_OUTCOME_P: out.push_back('P'); break;
                case WYTHOFF_OUTCOME_N: out.push_back('.'); break;
                case WYTHOFF_OUTCOME_OFF_BOARD: out.push_back('#'); break;
            }
        }
        out.push_back('\n');
    }
    return out;
}

std::string render_ppm(const wythoff_table* table) {
    const std::uint32_t bound = bound_of(table);
    const std::uint32_t side = bound + 1;
    std::string out = "P6\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    out.reserve(out.size() + std::size_t(side) * side * 3);
    for (std::uint32_t row = 0; row < side; ++row) {
        const std::uint32_t y = bound - row;
        for (std::uint32_t x = 0; x < side; ++x) {
            unsigned char v = 255;
            switch (cell(table, x, y)) {
                case WYTHOFF_OUTCOME_P: v = 0; break;
                case WYTHOFF_OUTCOME_N: v = 255; break;
                case WYTHOFF_OUTCOME_OFF_BOARD: v = 128; break;
            }
            out.push_back(static_cast<char>(v));
            out.push_back(static_cast<char>(v));
            out.push_back(static_cast<char>(v));
        }
    }
    return out;
}

std::string render_svg(const wythoff_table* table) {
    const std::uint32_t bound = bound_of(table);
    const std::uint32_t side = bound + 1;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
       << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
    os << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"white\"/>\n";
    for (std::uint32_t y = 0; y <= bound; ++y) {
        for (std::uint32_t x = 0; x <= bound; ++x) {
            const wythoff_outcome oc = cell(table, x, y);
            if (oc == WYTHOFF_OUTCOME_N) continue;
            const char* color = oc == WYTHOFF_OUTCOME_P ? "black" : "gray";
            os << "<rect x=\"" << x << "\" y=\"" << (bound - y) << "\" width=\"1\" height=\"1\" fill=\""
               << color << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cli
