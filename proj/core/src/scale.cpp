#include "pairrank/scale.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>

#include "pairrank/csv.hpp"
#include "pairrank/errors.hpp"

namespace pairrank {

ComparisonScale::ComparisonScale(std::string name, std::map<int, double> ratio_by_winner_halves)
    : name_(std::move(name)), ratios_(std::move(ratio_by_winner_halves)) {
    for (const auto& [halves, ratio] : ratios_) {
        if (ratio <= 1.0)
            throw ValidationError("scale '" + name_ + "': ratio for winner points " +
                                  BoardPoints::from_halves(halves).str() +
                                  " must exceed 1");
    }
}

bool ComparisonScale::covers_board_count(int boards) const {
    // winning scores are every half-point b with boards/2 < b <= boards
    for (int halves = boards + 1; halves <= 2 * boards; ++halves)
        if (!ratios_.count(halves)) return false;
    return true;
}

double ComparisonScale::ratio(BoardPoints winner_points) const {
    auto it = ratios_.find(winner_points.halves());
    if (it == ratios_.end())
        throw ValidationError("scale '" + name_ + "' has no ratio for winner board points " +
                              winner_points.str());
    return it->second;
}

ComparisonScale builtin_scale(const std::string& name) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    // winner board points 2.5 / 3 / 3.5 / 4 in halves
    if (key == "pc1") return ComparisonScale("pc1", {{5, 2.0}, {6, 3.0}, {7, 4.0}, {8, 5.0}});
    if (key == "pc2") return ComparisonScale("pc2", {{5, 3.0}, {6, 5.0}, {7, 7.0}, {8, 9.0}});
    if (key == "pc3") return ComparisonScale("pc3", {{5, 3.0}, {6, 4.0}, {7, 5.0}, {8, 6.0}});
    if (key == "pc4") return ComparisonScale("pc4", {{5, 3.0}, {6, 3.0}, {7, 3.0}, {8, 3.0}});
    throw ValidationError("unknown scale '" + name + "' (expected pc1, pc2, pc3 or pc4)");
}

ComparisonScale load_scale_csv(std::istream& in, std::string name) {
    const auto rows = csv::read(in);
    if (rows.empty()) throw ParseError("scale file has no header");

    const auto& header = rows.front().fields;
    if (header.size() != 2 || header[0] != "winner_points" || header[1] != "ratio")
        throw ParseError("scale header must be 'winner_points,ratio'", rows.front().line);

    std::map<int, double> ratios;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != 2)
            throw ParseError("scale row needs exactly 'winner_points,ratio'", row.line);
        auto points = BoardPoints::parse(row.fields[0]);
        if (!points)
            throw ParseError("winner_points '" + row.fields[0] + "' is off the half-point grid",
                             row.line);
        double ratio = 0.0;
        try {
            std::size_t consumed = 0;
            ratio = std::stod(row.fields[1], &consumed);
            if (consumed != row.fields[1].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("ratio '" + row.fields[1] + "' is not a number", row.line);
        }
        if (ratio <= 1.0)
            throw ParseError("ratio for winner points " + points->str() + " must exceed 1",
                             row.line);
        if (!ratios.emplace(points->halves(), ratio).second)
            throw ParseError("duplicate winner_points " + points->str(), row.line);
    }
    return ComparisonScale(std::move(name), std::move(ratios));
}

} // namespace pairrank
