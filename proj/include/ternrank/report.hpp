#pragma once

#include <string>
#include <vector>

#include "ternrank/ranking.hpp"

namespace ternrank {

enum class OutputFormat { tsv, csv, markdown };

struct RenderOptions {
    OutputFormat format = OutputFormat::tsv;
    int decimal_places = 8;
    int sparkline_width = 20;
    bool locale_comma = false; // comma decimal separator, as in printed tables
};

// Close-price microchart: `width` mean-downsampled buckets, min-max normalized
// onto the 8-level block glyph ramp. Output has min(width, n) glyphs.
std::string sparkline(const std::vector<double>& close, std::size_t width);

// Listing table with the full column set; negative variety rendered as {abs}.
std::string render_listing(const std::vector<ListingRow>& listing, const RenderOptions& opts);

struct VolatilityRow {
    std::string ticker;
    std::string company;
    std::size_t points = 0;
    double volatility = 0.0; // percent
    int growth = 0;
    int rank = 0;
    std::string sparkline;
};

std::string render_volatility(const std::vector<VolatilityRow>& rows, const RenderOptions& opts);

// Formats one number with fixed decimals; locale_comma swaps the separator.
std::string format_number(double value, int decimal_places, bool locale_comma);

} // namespace ternrank
