#include "ternrank/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "ternrank/error.hpp"

namespace ternrank {

std::vector<int> relative_price(const InstrumentSeries& series) {
    series.validate();
    const double p_max = *std::max_element(series.close.begin(), series.close.end());
    std::vector<int> rel;
    rel.reserve(series.size());
    for (double p : series.close)
        rel.push_back(static_cast<int>(std::llround(p / p_max * 100.0)));
    return rel;
}

std::vector<int> delta_series(const std::vector<int>& rel) {
    if (rel.size() < 2) throw InputError("relative-price series too short for deltas");
    std::vector<int> deltas;
    deltas.reserve(rel.size() - 1);
    for (std::size_t i = 0; i + 1 < rel.size(); ++i)
        deltas.push_back(rel[i + 1] - rel[i]);
    return deltas;
}

std::string symbolize_delta(int delta) {
    const int mag = std::abs(delta);
    if (mag > 100) throw InputError("delta out of range: " + std::to_string(delta));
    const char sign = delta < 0 ? '-' : (delta == 0 ? '~' : '+');
    // Two leading decimal digits; 100 truncates to "10".
    const int yz = mag == 100 ? 10 : mag;
    char buf[4];
    std::snprintf(buf, sizeof buf, "%02d", yz);
    return std::string(1, sign) + buf;
}

SymbolSeries symbolize(const std::vector<int>& deltas) {
    SymbolSeries letters;
    letters.reserve(deltas.size());
    for (int d : deltas) letters.push_back(symbolize_delta(d));
    return letters;
}

int sign_factor(const InstrumentSeries& series) {
    series.validate();
    const double p_first = series.close.front();
    const double p_last = series.close.back();
    const double p_avg =
        std::accumulate(series.close.begin(), series.close.end(), 0.0) / series.size();
    if (p_first > p_last || p_first > p_avg || p_avg > p_last) return -1;
    return 1;
}

int growth_percent(const InstrumentSeries& series) {
    if (!(series.close.front() > 0.0)) throw InputError("non-positive first price");
    return static_cast<int>(
        std::llround((series.close.back() / series.close.front() - 1.0) * 100.0));
}

std::vector<double> daily_returns(const InstrumentSeries& series) {
    if (series.size() < 2) throw InputError("series too short for returns");
    std::vector<double> returns;
    returns.reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
        returns.push_back(series.close[i + 1] / series.close[i] - 1.0);
    return returns;
}

std::vector<double> cash_flow(const InstrumentSeries& series) {
    std::vector<double> cash;
    cash.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        cash.push_back(series.close[i] * series.volume[i]);
    return cash;
}

} // namespace ternrank
