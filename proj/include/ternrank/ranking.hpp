#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ternrank/codec.hpp"
#include "ternrank/error.hpp"

namespace ternrank {

enum class LengthAdjust { plain, minus_one };

struct CompressionScore {
    std::string ticker;
    double value = 0.0; // signed percent; never zero
    std::size_t n = 0;  // series length used
};

// ticker -> dense rank (1-based; tied values share a rank).
using RankAssignment = std::map<std::string, int>;

// Signed, length-adjusted compression score:
// sgn * ratio_percent * n_max/n (plain) or * (n_max-1)/(n-1) (minus_one).
double compression_score_value(double ratio_percent, int sgn, std::size_t n,
                               std::size_t n_max, LengthAdjust mode);

// Two-phase dense ranking: positive scores ascending from rank 1, then
// negative scores descending (ascending magnitude), continuing the numbering.
RankAssignment rank_compression(const std::vector<CompressionScore>& scores);

// Root-mean-square of a cash-flow sequence.
double cashflow_rms(const std::vector<double>& cash);

// Dense ranks, 1 = largest RMS.
RankAssignment rank_cashflow(const std::vector<std::pair<std::string, double>>& values);

// Period volatility in percent: stddev of daily returns (divisor = return
// count) scaled by sqrt(n_max - 1) * 100.
double volatility(const std::vector<double>& returns, std::size_t n_max);

// Dense ranks, 1 = smallest volatility.
RankAssignment rank_volatility(const std::vector<std::pair<std::string, double>>& values);

struct ListingRow {
    std::string ticker;
    std::string company;
    std::size_t points = 0;      // series length n_A
    double variety = 0.0;        // signed compression percent
    int growth = 0;              // percent over the period
    int compression_rank = 0;
    int cashflow_rank = 0;
    int total_rank = 0;          // compression_rank + cashflow_rank
    double cashflow_rms = 0.0;
    std::string sparkline;
};

// Fills total_rank and orders rows ascending by total rank, ties by |variety|
// then ticker. Both rank assignments must cover exactly the rows' tickers.
std::vector<ListingRow> total_ranking(std::vector<ListingRow> rows,
                                      const RankAssignment& compression_ranks,
                                      const RankAssignment& cashflow_ranks);

} // namespace ternrank
