#pragma once

#include <ostream>
#include <string>

#include "ternrank/market_data.hpp"
#include "ternrank/ranking.hpp"
#include "ternrank/report.hpp"

namespace ternrank {

struct RunConfig {
    std::string universe_path;
    std::string data_dir;
    std::string from; // ISO date; empty = today minus 5 years
    std::string to;   // ISO date; empty = today
    LengthAdjust length_adjust = LengthAdjust::plain;
    RenderOptions render;
    std::string out_path;      // empty = caller prints to stdout
    std::string provider_url;  // fetch only
};

// Full ranking pipeline for a universe: load, transform, compress, score,
// rank, assemble, render. Returns the rendered listing.
std::string run_rank(const RunConfig& config);

// Volatility table for the same universe.
std::string run_volatility(const RunConfig& config);

// Per-ticker compression diagnostics (n, l_src, l_cod, l_abc, ratio, sgn, score).
std::string run_compress(const std::string& ticker, const RunConfig& config);

// Fetches every universe ticker into the data_dir cache. Logs one line per
// ticker; returns the number of failed fetches.
int run_fetch(const RunConfig& config, std::ostream& log);

// Resolves empty from/to to the default 5-year window ending today.
void resolve_window(std::string& from, std::string& to);

} // namespace ternrank
