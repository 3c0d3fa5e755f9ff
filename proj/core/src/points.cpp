#include "pairrank/points.hpp"

#include <cctype>

namespace pairrank {

std::optional<BoardPoints> BoardPoints::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;

    std::size_t dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                          : text.substr(dot + 1);
    if (whole.empty()) return std::nullopt;

    int units = 0;
    for (char c : whole) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        units = units * 10 + (c - '0');
        if (units > 1000) return std::nullopt; // no sane board count gets here
    }

    int halves = units * 2;
    if (dot != std::string_view::npos) {
        // only .0 and .5 sit on the half-point grid
        if (frac == "5") halves += 1;
        else if (frac != "0" && !frac.empty()) return std::nullopt;
        if (frac.empty()) return std::nullopt; // "3." is malformed
    }
    return BoardPoints(halves);
}

std::string BoardPoints::str() const {
    std::string out = std::to_string(halves_ / 2);
    if (halves_ % 2) out += ".5";
    return out;
}

} // namespace pairrank
