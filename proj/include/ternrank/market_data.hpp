#pragma once

#include <string>
#include <vector>

#include "ternrank/error.hpp"

namespace ternrank {

struct UniverseEntry {
    std::string ticker;
    std::string company;
};

// Ordered list of instruments to rank; order is preserved from the source file.
struct Universe {
    std::vector<UniverseEntry> entries;
};

// Date-aligned daily close/volume history for one ticker.
// Dates are ISO-8601 strings (YYYY-MM-DD), strictly ascending.
struct InstrumentSeries {
    std::string ticker;
    std::vector<std::string> dates;
    std::vector<double> close;
    std::vector<double> volume;

    std::size_t size() const { return dates.size(); }

    // Throws InputError on any broken invariant.
    void validate() const;
};

// CSV with header `ticker,company`, one instrument per row.
Universe load_universe(const std::string& path);

// Reads `<data_dir>/<ticker>.csv` (header `date,close,volume`), keeps rows with
// from <= date <= to, validates the result. Empty from/to means unbounded.
InstrumentSeries load_series(const std::string& ticker, const std::string& data_dir,
                             const std::string& from, const std::string& to);

// Serializes a loaded series back to the canonical `date,close,volume` CSV text.
std::string series_to_csv(const InstrumentSeries& series);

struct ProviderConfig {
    // URL template with {ticker}, {from}, {to} placeholders, e.g.
    // http://host:8080/daily/{ticker}.csv?from={from}&to={to}
    std::string url_template;
};

// HTTP GET of the per-ticker CSV, persisted to `<data_dir>/<ticker>.csv`.
// The body must carry the `date,close,volume` header; otherwise nothing is written.
void fetch_series(const std::string& ticker, const ProviderConfig& provider,
                  const std::string& data_dir, const std::string& from, const std::string& to);

} // namespace ternrank
