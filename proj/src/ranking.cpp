#include "ternrank/ranking.hpp"

#include <algorithm>
#include <cmath>

namespace ternrank {

double compression_score_value(double ratio_percent, int sgn, std::size_t n,
                               std::size_t n_max, LengthAdjust mode) {
    if (n < 2) throw InputError("series length must be at least 2");
    if (n_max < n) throw InputError("n_max smaller than series length");
    const double adjust = mode == LengthAdjust::plain
                              ? static_cast<double>(n_max) / static_cast<double>(n)
                              : static_cast<double>(n_max - 1) / static_cast<double>(n - 1);
    return sgn * ratio_percent * adjust;
}

namespace {

// Dense ranks over values pre-sorted into ranking order: equal neighbors share
// a rank, each new distinct value takes the next integer.
void assign_dense(const std::vector<std::pair<std::string, double>>& sorted,
                  RankAssignment& ranks, int& next_rank) {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].second != sorted[i - 1].second) ++next_rank;
        ranks[sorted[i].first] = next_rank;
    }
    if (!sorted.empty()) ++next_rank;
}

} // namespace

RankAssignment rank_compression(const std::vector<CompressionScore>& scores) {
    std::vector<std::pair<std::string, double>> positive;
    std::vector<std::pair<std::string, double>> negative;
    for (const auto& s : scores) {
        if (s.value == 0.0) throw InputError(s.ticker + ": zero compression score");
        (s.value > 0.0 ? positive : negative).emplace_back(s.ticker, s.value);
    }
    // Positive scores ascending, then negative scores descending (ascending
    // magnitude), continuing the numbering.
    std::sort(positive.begin(), positive.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::sort(negative.begin(), negative.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });

    RankAssignment ranks;
    int next_rank = 1;
    assign_dense(positive, ranks, next_rank);
    assign_dense(negative, ranks, next_rank);
    return ranks;
}

double cashflow_rms(const std::vector<double>& cash) {
    if (cash.empty()) throw InputError("empty cash-flow series");
    double sum_sq = 0.0;
    for (double c : cash) sum_sq += c * c;
    return std::sqrt(sum_sq / static_cast<double>(cash.size()));
}

RankAssignment rank_cashflow(const std::vector<std::pair<std::string, double>>& values) {
    if (values.empty()) throw InputError("no cash-flow values to rank");
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    RankAssignment ranks;
    int next_rank = 1;
    assign_dense(sorted, ranks, next_rank);
    return ranks;
}

double volatility(const std::vector<double>& returns, std::size_t n_max) {
    if (returns.empty()) throw InputError("empty returns sequence");
    if (n_max < 2) throw InputError("n_max must be at least 2");
    // Exactly zero for an all-equal sequence; summation residue would
    // otherwise leave a spurious ~1e-15 deviation.
    if (std::all_of(returns.begin(), returns.end(),
                    [&](double r) { return r == returns.front(); }))
        return 0.0;
    const double count = static_cast<double>(returns.size());
    double mean = 0.0;
    for (double r : returns) mean += r;
    mean /= count;
    double sum_sq = 0.0;
    for (double r : returns) sum_sq += (r - mean) * (r - mean);
    const double deviation = std::sqrt(sum_sq / count);
    return deviation * std::sqrt(static_cast<double>(n_max - 1)) * 100.0;
}

RankAssignment rank_volatility(const std::vector<std::pair<std::string, double>>& values) {
    if (values.empty()) throw InputError("no volatility values to rank");
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    RankAssignment ranks;
    int next_rank = 1;
    assign_dense(sorted, ranks, next_rank);
    return ranks;
}

std::vector<ListingRow> total_ranking(std::vector<ListingRow> rows,
                                      const RankAssignment& compression_ranks,
                                      const RankAssignment& cashflow_ranks) {
    if (compression_ranks.size() != rows.size() || cashflow_ranks.size() != rows.size())
        throw InputError("rank assignments do not cover the listing tickers");
    for (auto& row : rows) {
        auto comp = compression_ranks.find(row.ticker);
        auto cash = cashflow_ranks.find(row.ticker);
        if (comp == compression_ranks.end() || cash == cashflow_ranks.end())
            throw InputError(row.ticker + ": missing rank assignment");
        row.compression_rank = comp->second;
        row.cashflow_rank = cash->second;
        row.total_rank = row.compression_rank + row.cashflow_rank;
    }
    std::sort(rows.begin(), rows.end(), [](const ListingRow& a, const ListingRow& b) {
        if (a.total_rank != b.total_rank) return a.total_rank < b.total_rank;
        if (std::abs(a.variety) != std::abs(b.variety))
            return std::abs(a.variety) < std::abs(b.variety);
        return a.ticker < b.ticker;
    });
    return rows;
}

} // namespace ternrank
