#pragma once

#include <string>
#include <vector>

#include "ternrank/market_data.hpp"

namespace ternrank {

// Sequence of 3-character letters over the XYZ template:
// X in {'-','~','+'}, Y and Z decimal digits.
using SymbolSeries = std::vector<std::string>;

// Closes rescaled so the period maximum maps to 100, rounded to integer
// (half away from zero). Every element lies in [0, 100].
std::vector<int> relative_price(const InstrumentSeries& series);

// First differences of the relative-price series, length n-1, values in [-100, 100].
std::vector<int> delta_series(const std::vector<int>& rel);

// One XYZ letter per delta: sign character plus the two leading decimal digits
// of the magnitude (leading zero below 10; 100 truncates to "10").
SymbolSeries symbolize(const std::vector<int>& deltas);

// Single letter for one delta value.
std::string symbolize_delta(int delta);

// Trend sign: -1 if p_1 > p_n, p_1 > p_avg, or p_avg > p_n (strict); +1 otherwise.
int sign_factor(const InstrumentSeries& series);

// round((p_n / p_1 - 1) * 100), half away from zero.
int growth_percent(const InstrumentSeries& series);

// Simple daily returns p_{i+1}/p_i - 1, length n-1.
std::vector<double> daily_returns(const InstrumentSeries& series);

// Elementwise close * volume, length n.
std::vector<double> cash_flow(const InstrumentSeries& series);

} // namespace ternrank
