#pragma once

// Builders shared by the test binaries.

#include <cstddef>
#include <string>
#include <vector>

#include "prob.hpp"
#include "rational.hpp"

namespace testutil {

inline itsec::Rational q(const std::string& text) {
    return itsec::rational_from_string(text);
}

inline itsec::Distribution dist(const itsec::Alphabet& alphabet,
                                const std::vector<std::string>& weights) {
    std::vector<itsec::Rational> parsed;
    parsed.reserve(weights.size());
    for (const auto& w : weights) parsed.push_back(q(w));
    return itsec::Distribution(alphabet, std::move(parsed));
}

// rows[c][m]; alphabets are c1..cN and m1..mM.
inline itsec::ChannelMatrix channel_from_rows(
    const std::vector<std::vector<std::string>>& rows) {
    const std::size_t n_c = rows.size();
    const std::size_t n_m = rows.front().size();
    auto messages = itsec::Alphabet::indexed("m", n_m);
    auto cryptograms = itsec::Alphabet::indexed("c", n_c);
    std::vector<itsec::Distribution> columns;
    columns.reserve(n_m);
    for (std::size_t m = 0; m < n_m; ++m) {
        std::vector<itsec::Rational> column;
        column.reserve(n_c);
        for (std::size_t c = 0; c < n_c; ++c) column.push_back(q(rows[c][m]));
        columns.emplace_back(cryptograms, std::move(column));
    }
    return itsec::ChannelMatrix(std::move(messages), std::move(columns));
}

inline itsec::ChannelMatrix identity_channel(std::size_t degree) {
    std::vector<std::vector<std::string>> rows(degree,
                                               std::vector<std::string>(degree, "0"));
    for (std::size_t i = 0; i < degree; ++i) rows[i][i] = "1";
    return channel_from_rows(rows);
}

inline itsec::ChannelMatrix uniform_channel(std::size_t degree) {
    const std::string cell = "1/" + std::to_string(degree);
    return channel_from_rows(std::vector<std::vector<std::string>>(
        degree, std::vector<std::string>(degree, cell)));
}

}  // namespace testutil
