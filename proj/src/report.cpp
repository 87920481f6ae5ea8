#include "ternrank/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace ternrank {

namespace {

// 8-level block glyph ramp, lowest to highest.
const std::array<const char*, 8> kGlyphs = {
    "▁", "▂", "▃", "▄", "▅", "▆", "▇", "█"};

std::string csv_escape(const std::string& field, char sep) {
    if (field.find(sep) == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct TableWriter {
    OutputFormat format;
    char sep() const { return format == OutputFormat::csv ? ',' : '\t'; }

    std::string row(const std::vector<std::string>& cells) const {
        std::ostringstream out;
        if (format == OutputFormat::markdown) {
            out << '|';
            for (const auto& c : cells) out << ' ' << c << " |";
        } else {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << sep();
                out << csv_escape(cells[i], sep());
            }
        }
        out << '\n';
        return out.str();
    }

    std::string divider(std::size_t columns) const {
        if (format != OutputFormat::markdown) return "";
        std::ostringstream out;
        out << '|';
        for (std::size_t i = 0; i < columns; ++i) out << " --- |";
        out << '\n';
        return out.str();
    }
};

} // namespace

std::string format_number(double value, int decimal_places, bool locale_comma) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(decimal_places);
    out << value;
    std::string s = out.str();
    if (locale_comma) {
        auto dot = s.find('.');
        if (dot != std::string::npos) s[dot] = ',';
    }
    return s;
}

namespace {

// Negative scores are printed as the braced absolute value.
std::string format_variety(double value, const RenderOptions& opts) {
    if (value < 0.0)
        return "{" + format_number(-value, opts.decimal_places, opts.locale_comma) + "}";
    return format_number(value, opts.decimal_places, opts.locale_comma);
}

} // namespace

std::string sparkline(const std::vector<double>& close, std::size_t width) {
    if (close.size() < 2) throw InputError("series too short for a sparkline");
    if (width < 2) throw InputError("sparkline width must be at least 2");

    const std::size_t buckets = std::min(width, close.size());
    std::vector<double> levels(buckets);
    for (std::size_t b = 0; b < buckets; ++b) {
        const std::size_t lo = b * close.size() / buckets;
        const std::size_t hi = (b + 1) * close.size() / buckets;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) sum += close[i];
        levels[b] = sum / static_cast<double>(hi - lo);
    }

    const auto [min_it, max_it] = std::minmax_element(levels.begin(), levels.end());
    const double lo = *min_it, hi = *max_it;
    std::string out;
    for (double v : levels) {
        int idx = 0;
        if (hi > lo)
            idx = std::min<int>(7, static_cast<int>((v - lo) / (hi - lo) * 8.0));
        out += kGlyphs[static_cast<std::size_t>(idx)];
    }
    return out;
}

std::string render_listing(const std::vector<ListingRow>& listing, const RenderOptions& opts) {
    if (listing.empty()) throw InputError("empty listing");
    TableWriter w{opts.format};
    std::ostringstream out;
    const std::vector<std::string> header = {"sticker",    "company",    "points",
                                             "variety",    "microchart", "growth",
                                             "rank",       "total_rank", "cashflow_rank",
                                             "cashflow_rms"};
    out << w.row(header) << w.divider(header.size());
    for (const auto& r : listing) {
        out << w.row({r.ticker, r.company, std::to_string(r.points),
                      format_variety(r.variety, opts), r.sparkline, std::to_string(r.growth),
                      std::to_string(r.compression_rank), std::to_string(r.total_rank),
                      std::to_string(r.cashflow_rank),
                      format_number(r.cashflow_rms, opts.decimal_places, opts.locale_comma)});
    }
    return out.str();
}

std::string render_volatility(const std::vector<VolatilityRow>& rows, const RenderOptions& opts) {
    if (rows.empty()) throw InputError("empty volatility table");
    TableWriter w{opts.format};
    std::ostringstream out;
    const std::vector<std::string> header = {"sticker", "company",    "points", "volatility",
                                             "microchart", "growth", "rank"};
    out << w.row(header) << w.divider(header.size());
    for (const auto& r : rows) {
        out << w.row({r.ticker, r.company, std::to_string(r.points),
                      format_number(r.volatility, opts.decimal_places, opts.locale_comma),
                      r.sparkline, std::to_string(r.growth), std::to_string(r.rank)});
    }
    return out.str();
}

} // namespace ternrank
