#pragma once

// Printed columns of the published Dow Jones listing tables, used as fixed
// inputs for rank-structure reproduction tests.

#include <string>
#include <vector>

namespace ternrank::testing {

struct ListingTableRow {
    std::string ticker;
    std::string company;
    std::size_t points;
    double variety; // signed; braced table cells are negative
    int growth;
    int compression_rank;
    int total_rank;
    int cashflow_rank;
    double cashflow_rms;
};

// Main listing table, in printed (total-rank) order.
inline const std::vector<ListingTableRow>& listing_table() {
    static const std::vector<ListingTableRow> rows = {
        {"MSFT", "Microsoft Corporation", 1257, 16.00318471, 410, 1, 3, 2, 4924657291.0},
        {"AAPL", "Apple Inc", 1257, 16.17569002, 381, 2, 3, 1, 6931222546.0},
        {"V", "Visa Inc", 1257, 16.54723992, 172, 8, 13, 5, 1471517711.0},
        {"CRM", "salesforcecom inc", 1257, 16.40127389, 276, 6, 15, 9, 1338206283.0},
        {"HD", "Home Depot Inc", 1257, 16.4410828, 167, 7, 18, 11, 1040156295.0},
        {"JPM", "JPMorgan Chase & Co", 1257, 16.86571125, 145, 14, 18, 4, 1784428048.0},
        {"DIS", "Walt Disney Co", 1257, 16.85244161, 90, 13, 20, 7, 1559375992.0},
        {"GS", "Goldman Sachs Group Inc", 1257, 16.30838641, 127, 4, 21, 17, 822365723.0},
        {"UNH", "UnitedHealth Group Inc", 1257, 16.62685775, 201, 9, 21, 12, 1070129583.0},
        {"WMT", "Walmart Inc", 1257, 16.79936306, 104, 11, 24, 13, 1032778856.0},
        {"CAT", "Caterpillar Inc", 1257, 16.28184713, 117, 3, 26, 23, 677779812.0},
        {"NKE", "Nike Inc", 1257, 16.33492569, 197, 5, 26, 21, 759956485.0},
        {"BA", "Boeing Co", 1257, -16.53397028, 67, 24, 27, 3, 3339994965.0},
        {"CSCO", "Cisco Systems Inc", 1257, 21.32430998, 80, 17, 27, 10, 1056056795.0},
        {"INTC", "Intel Corporation", 1257, 21.70912951, 39, 21, 27, 6, 1497920089.0},
        {"JNJ", "Johnson & Johnson", 1257, 21.47027601, 34, 20, 28, 8, 1101848089.0},
        {"PG", "Procter & Gamble Co", 1257, 16.985138, 61, 15, 29, 14, 937299533.0},
        {"MCD", "McDonald s Corp", 1257, 16.73301486, 114, 10, 32, 22, 700537424.0},
        {"MRK", "Merck & Co Inc", 1257, 21.43046709, 34, 19, 37, 18, 843885281.0},
        {"AXP", "American Express Company", 1257, 16.83917197, 191, 12, 39, 27, 460478802.0},
        {"HON", "Honeywell International Inc", 1257, 16.86571125, 105, 14, 40, 26, 536096677.0},
        {"KO", "Coca-Cola Co", 1257, 21.72239915, 30, 22, 41, 19, 736051379.0},
        {"AMGN", "Amgen Inc", 1257, 21.33757962, 25, 18, 42, 24, 679059594.0},
        {"CVX", "Chevron Corporation", 1257, -21.31104034, 6, 27, 43, 16, 900795672.0},
        {"VZ", "Verizon Communications Inc", 1257, -21.80201699, 2, 29, 44, 15, 910789686.0},
        {"TRV", "Travelers Companies Inc", 1257, 17.13110403, 36, 16, 46, 30, 211646001.0},
        {"IBM", "IBM Common Stock", 1257, -21.32430998, -9, 28, 48, 20, 774301777.0},
        {"MMM", "3M Co", 1257, -16.87898089, 3, 26, 51, 25, 529107096.0},
        {"DOW", "Dow Inc", 648, 36.07795714, 16, 23, 52, 29, 272400059.0},
        {"WBA", "Walgreens Boots Alliance Inc", 1257, -16.65339703, -39, 25, 53, 28, 414246923.0},
    };
    return rows;
}

struct RankedValue {
    std::string ticker;
    double value;
    int rank;
};

// Volatility comparison table: period volatility percent, ranked ascending.
inline const std::vector<RankedValue>& volatility_table() {
    static const std::vector<RankedValue> rows = {
        {"VZ", 42.53636, 1},   {"JNJ", 44.79160, 2},  {"KO", 44.92054, 3},
        {"PG", 45.32519, 4},   {"WMT", 48.61491, 5},  {"MRK", 49.23611, 6},
        {"MCD", 51.56944, 7},  {"MMM", 55.66549, 8},  {"HON", 56.14899, 9},
        {"AMGN", 57.12106, 10}, {"HD", 57.35623, 11}, {"V", 58.06310, 12},
        {"IBM", 58.33645, 13}, {"CSCO", 60.03519, 14}, {"TRV", 60.26622, 15},
        {"MSFT", 61.18618, 16}, {"UNH", 63.76063, 17}, {"DIS", 64.02403, 18},
        {"NKE", 64.87397, 19}, {"JPM", 67.31923, 20}, {"AAPL", 67.53565, 21},
        {"WBA", 69.65455, 22}, {"CAT", 69.67088, 23}, {"GS", 70.61306, 24},
        {"CVX", 73.81625, 25}, {"CRM", 74.15989, 26}, {"AXP", 76.33491, 27},
        {"INTC", 76.45159, 28}, {"DOW", 102.78006, 29}, {"BA", 103.98828, 30},
    };
    return rows;
}

// Compression-only ranking table: signed variety percent with the two-phase
// rank column (positives ascending, negatives continuing by magnitude).
inline const std::vector<RankedValue>& compression_rank_table() {
    static const std::vector<RankedValue> rows = {
        {"MSFT", 16.00318, 1},  {"AAPL", 16.17569, 2},  {"CAT", 16.28185, 3},
        {"GS", 16.30839, 4},    {"NKE", 16.33493, 5},   {"CRM", 16.40127, 6},
        {"HD", 16.44108, 7},    {"V", 16.54724, 8},     {"UNH", 16.62686, 9},
        {"MCD", 16.73301, 10},  {"WMT", 16.79936, 11},  {"AXP", 16.83917, 12},
        {"DIS", 16.85244, 13},  {"HON", 16.86571, 14},  {"JPM", 16.86571, 14},
        {"PG", 16.98514, 15},   {"TRV", 17.1311, 16},   {"CSCO", 21.32431, 17},
        {"AMGN", 21.33758, 18}, {"MRK", 21.43047, 19},  {"JNJ", 21.47028, 20},
        {"INTC", 21.70913, 21}, {"KO", 21.7224, 22},    {"DOW", 36.07796, 23},
        {"BA", -16.53397, 24},  {"WBA", -16.6534, 25},  {"MMM", -16.87898, 26},
        {"CVX", -21.31104, 27}, {"IBM", -21.32431, 28}, {"VZ", -21.80202, 29},
    };
    return rows;
}

} // namespace ternrank::testing
