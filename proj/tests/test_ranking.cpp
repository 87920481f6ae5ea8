#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ternrank/ranking.hpp"
#include "paper_tables.hpp"

using namespace ternrank;

TEST_CASE("compression score scaling") {
    CHECK(compression_score_value(100.0, 1, 10, 10, LengthAdjust::plain) == 100.0);
    // back-computed from the short-history row: 648 of 1257 points
    CHECK(std::abs(compression_score_value(18.5990, 1, 648, 1257, LengthAdjust::plain) -
                   36.0779) < 1e-3);
    CHECK(compression_score_value(16.53397028, -1, 1257, 1257, LengthAdjust::plain) ==
          doctest::Approx(-16.53397028));
    // minus-one mode
    CHECK(compression_score_value(10.0, 1, 3, 5, LengthAdjust::minus_one) ==
          doctest::Approx(20.0));
    CHECK_THROWS_AS(compression_score_value(10.0, 1, 10, 5, LengthAdjust::plain), InputError);
}

TEST_CASE("two-phase dense compression ranking") {
    std::vector<CompressionScore> scores = {
        {"A", 10.0, 5}, {"B", 20.0, 5}, {"C", -5.0, 5}, {"D", -7.0, 5}};
    auto ranks = rank_compression(scores);
    CHECK(ranks.at("A") == 1);
    CHECK(ranks.at("B") == 2);
    CHECK(ranks.at("C") == 3);
    CHECK(ranks.at("D") == 4);

    // tied neighborhood from the published table
    std::vector<CompressionScore> tied = {{"DIS", 16.85244, 1257},
                                          {"HON", 16.86571, 1257},
                                          {"JPM", 16.86571, 1257},
                                          {"PG", 16.98514, 1257}};
    auto tr = rank_compression(tied);
    CHECK(tr.at("DIS") == 1);
    CHECK(tr.at("HON") == 2);
    CHECK(tr.at("JPM") == 2);
    CHECK(tr.at("PG") == 3);

    CHECK_THROWS_AS(rank_compression({{"Z", 0.0, 5}}), InputError);
}

TEST_CASE("published compression rank column reproduces exactly") {
    std::vector<CompressionScore> scores;
    for (const auto& row : ternrank::testing::compression_rank_table())
        scores.push_back({row.ticker, row.value, 1257});
    auto ranks = rank_compression(scores);
    for (const auto& row : ternrank::testing::compression_rank_table())
        CHECK_MESSAGE(ranks.at(row.ticker) == row.rank, row.ticker);
}

TEST_CASE("cash-flow RMS") {
    CHECK(cashflow_rms({7, 7, 7}) == doctest::Approx(7.0));
    CHECK(cashflow_rms({3, 4}) == doctest::Approx(std::sqrt(12.5)));
    CHECK(cashflow_rms({0, 0, 0}) == 0.0);
    CHECK_THROWS_AS(cashflow_rms({}), InputError);
}

TEST_CASE("cash-flow ranking: 1 = largest, dense ties") {
    auto ranks = rank_cashflow({{"AAPL", 6931222546.0}, {"MSFT", 4924657291.0}});
    CHECK(ranks.at("AAPL") == 1);
    CHECK(ranks.at("MSFT") == 2);

    auto tied = rank_cashflow({{"A", 5.0}, {"B", 5.0}, {"C", 5.0}});
    CHECK(tied.at("A") == 1);
    CHECK(tied.at("B") == 1);
    CHECK(tied.at("C") == 1);

    auto strict = rank_cashflow({{"A", 10.0}, {"B", 5.0}, {"C", 1.0}});
    CHECK(strict.at("A") == 1);
    CHECK(strict.at("B") == 2);
    CHECK(strict.at("C") == 3);

    // argsort invariance under positive scaling
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> v(0.0, 1e9);
    std::vector<std::pair<std::string, double>> values;
    for (int i = 0; i < 15; ++i) values.emplace_back("T" + std::to_string(i), v(rng));
    auto base = rank_cashflow(values);
    for (auto& [t, x] : values) x *= 4.0;
    CHECK(rank_cashflow(values) == base);
}

TEST_CASE("total ranking order and tie-breaks") {
    std::vector<ListingRow> rows(2);
    rows[0].ticker = "AAPL"; rows[0].variety = 16.17569002;
    rows[1].ticker = "MSFT"; rows[1].variety = 16.00318471;
    auto listing = total_ranking(rows, {{"AAPL", 2}, {"MSFT", 1}}, {{"AAPL", 1}, {"MSFT", 2}});
    REQUIRE(listing.size() == 2);
    CHECK(listing[0].ticker == "MSFT"); // smaller |variety| wins the (3,3) tie
    CHECK(listing[0].total_rank == 3);
    CHECK(listing[1].ticker == "AAPL");

    std::vector<ListingRow> trio(3);
    trio[0].ticker = "INTC"; trio[0].variety = 21.70912951;
    trio[1].ticker = "BA";   trio[1].variety = -16.53397028;
    trio[2].ticker = "CSCO"; trio[2].variety = 21.32430998;
    auto l3 = total_ranking(trio, {{"INTC", 21}, {"BA", 24}, {"CSCO", 17}},
                            {{"INTC", 6}, {"BA", 3}, {"CSCO", 10}});
    CHECK(l3[0].ticker == "BA");
    CHECK(l3[1].ticker == "CSCO");
    CHECK(l3[2].ticker == "INTC");

    std::vector<ListingRow> one(1);
    one[0].ticker = "X"; one[0].variety = 12.0;
    auto l1 = total_ranking(one, {{"X", 1}}, {{"X", 1}});
    CHECK(l1[0].total_rank == 2);

    CHECK_THROWS_AS(total_ranking(one, {{"Y", 1}}, {{"X", 1}}), InputError);
}

TEST_CASE("volatility formula") {
    CHECK(volatility({0.01, 0.01, 0.01}, 4) == 0.0);
    CHECK(volatility({0.01, -0.01}, 3) == doctest::Approx(1.41421).epsilon(1e-5));
    CHECK_THROWS_AS(volatility({}, 3), InputError);

    // scale homogeneity
    std::mt19937 rng(9);
    std::normal_distribution<double> r(0.0, 0.02);
    std::vector<double> returns(100);
    for (auto& x : returns) x = r(rng);
    const double base = volatility(returns, 1257);
    CHECK(base >= 0.0);
    for (auto& x : returns) x *= 3.0;
    CHECK(volatility(returns, 1257) == doctest::Approx(3.0 * base).epsilon(1e-12));
}

TEST_CASE("volatility ranking: 1 = smallest") {
    auto ranks = rank_volatility({{"A", 1.0}, {"B", 2.0}});
    CHECK(ranks.at("A") == 1);
    CHECK(ranks.at("B") == 2);
    auto tied = rank_volatility({{"A", 1.0}, {"B", 1.0}});
    CHECK(tied.at("A") == 1);
    CHECK(tied.at("B") == 1);
}

TEST_CASE("published volatility rank column reproduces exactly") {
    std::vector<std::pair<std::string, double>> values;
    for (const auto& row : ternrank::testing::volatility_table())
        values.emplace_back(row.ticker, row.value);
    auto ranks = rank_volatility(values);
    for (const auto& row : ternrank::testing::volatility_table())
        CHECK_MESSAGE(ranks.at(row.ticker) == row.rank, row.ticker);
}

TEST_CASE("rank assignments are dense and permutation-invariant") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> len(1, 20);
    std::uniform_int_distribution<int> raw(-8, 8);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<CompressionScore> scores;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int v = raw(rng);
            if (v == 0) v = 1;
            scores.push_back({"T" + std::to_string(i), static_cast<double>(v), 5});
        }
        auto ranks = rank_compression(scores);

        // dense: assigned ranks are exactly 1..k
        std::set<int> distinct;
        for (const auto& [t, r] : ranks) distinct.insert(r);
        CHECK(*distinct.begin() == 1);
        CHECK(*distinct.rbegin() == static_cast<int>(distinct.size()));

        // brute-force oracle: positives ascending, then negatives by magnitude
        for (const auto& a : scores) {
            int expected = 1;
            std::set<double> keys;
            for (const auto& b : scores) {
                const bool before =
                    (a.value > 0 && b.value > 0 && b.value < a.value) ||
                    (a.value < 0 && (b.value > 0 || (b.value < 0 && b.value > a.value)));
                if (before) keys.insert(b.value);
            }
            expected += static_cast<int>(keys.size());
            CHECK(ranks.at(a.ticker) == expected);
        }

        auto shuffled = scores;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(rank_compression(shuffled) == ranks);
    }
}
