#include "ternrank/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "ternrank/codec.hpp"
#include "ternrank/transform.hpp"

namespace ternrank {

namespace {

std::string join_letters(const SymbolSeries& letters) {
    std::string s;
    s.reserve(letters.size() * 3);
    for (const auto& letter : letters) s += letter;
    return s;
}

struct TickerAnalysis {
    InstrumentSeries series;
    CompressionStats stats;
    int sgn = 1;
};

TickerAnalysis analyze_ticker(const std::string& ticker, const RunConfig& config) {
    TickerAnalysis a;
    a.series = load_series(ticker, config.data_dir, config.from, config.to);
    const auto symbols = symbolize(delta_series(relative_price(a.series)));
    a.stats = compression_stats(join_letters(symbols));
    a.sgn = sign_factor(a.series);
    return a;
}

std::size_t max_series_length(const std::vector<TickerAnalysis>& analyses) {
    std::size_t n_max = 0;
    for (const auto& a : analyses) n_max = std::max(n_max, a.series.size());
    return n_max;
}

std::vector<TickerAnalysis> analyze_universe(const Universe& universe, const RunConfig& config) {
    std::vector<TickerAnalysis> analyses;
    analyses.reserve(universe.entries.size());
    // Fail-fast: one bad ticker would silently shift n_max and every rank.
    for (const auto& entry : universe.entries) analyses.push_back(analyze_ticker(entry.ticker, config));
    return analyses;
}

} // namespace

void resolve_window(std::string& from, std::string& to) {
    using namespace std::chrono;
    const auto today = year_month_day{floor<days>(system_clock::now())};
    auto iso = [](year_month_day d) {
        std::ostringstream out;
        out << int(d.year()) << '-';
        out.width(2); out.fill('0'); out << unsigned(d.month()) << '-';
        out.width(2); out.fill('0'); out << unsigned(d.day());
        return out.str();
    };
    if (to.empty()) to = iso(today);
    if (from.empty()) {
        auto start = year_month_day{today.year() - years{5}, today.month(), today.day()};
        if (!start.ok()) start = start.year() / start.month() / last; // Feb 29 -> Feb 28
        from = iso(start);
    }
}

std::string run_rank(const RunConfig& config) {
    RunConfig cfg = config;
    resolve_window(cfg.from, cfg.to);

    const Universe universe = load_universe(cfg.universe_path);
    const auto analyses = analyze_universe(universe, cfg);
    const std::size_t n_max = max_series_length(analyses);

    std::vector<CompressionScore> scores;
    std::vector<std::pair<std::string, double>> rms_values;
    std::vector<ListingRow> rows;
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        const auto& a = analyses[i];
        const double value = compression_score_value(a.stats.ratio_percent, a.sgn,
                                                     a.series.size(), n_max, cfg.length_adjust);
        const double rms = cashflow_rms(cash_flow(a.series));
        scores.push_back({a.series.ticker, value, a.series.size()});
        rms_values.emplace_back(a.series.ticker, rms);

        ListingRow row;
        row.ticker = a.series.ticker;
        row.company = universe.entries[i].company;
        row.points = a.series.size();
        row.variety = value;
        row.growth = growth_percent(a.series);
        row.cashflow_rms = rms;
        row.sparkline = sparkline(a.series.close,
                                  static_cast<std::size_t>(cfg.render.sparkline_width));
        rows.push_back(std::move(row));
    }

    const auto listing =
        total_ranking(std::move(rows), rank_compression(scores), rank_cashflow(rms_values));
    return render_listing(listing, cfg.render);
}

std::string run_volatility(const RunConfig& config) {
    RunConfig cfg = config;
    resolve_window(cfg.from, cfg.to);

    const Universe universe = load_universe(cfg.universe_path);
    std::vector<InstrumentSeries> series;
    series.reserve(universe.entries.size());
    for (const auto& entry : universe.entries)
        series.push_back(load_series(entry.ticker, cfg.data_dir, cfg.from, cfg.to));

    std::size_t n_max = 0;
    for (const auto& s : series) n_max = std::max(n_max, s.size());

    std::vector<std::pair<std::string, double>> values;
    std::vector<VolatilityRow> rows;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const double vol = volatility(daily_returns(s), n_max);
        values.emplace_back(s.ticker, vol);

        VolatilityRow row;
        row.ticker = s.ticker;
        row.company = universe.entries[i].company;
        row.points = s.size();
        row.volatility = vol;
        row.growth = growth_percent(s);
        row.sparkline = sparkline(s.close, static_cast<std::size_t>(cfg.render.sparkline_width));
        rows.push_back(std::move(row));
    }

    const RankAssignment ranks = rank_volatility(values);
    for (auto& row : rows) row.rank = ranks.at(row.ticker);
    std::sort(rows.begin(), rows.end(), [](const VolatilityRow& a, const VolatilityRow& b) {
        if (a.volatility != b.volatility) return a.volatility < b.volatility;
        return a.ticker < b.ticker;
    });
    return render_volatility(rows, cfg.render);
}

std::string run_compress(const std::string& ticker, const RunConfig& config) {
    RunConfig cfg = config;
    resolve_window(cfg.from, cfg.to);

    const TickerAnalysis a = analyze_ticker(ticker, cfg);
    std::size_t n_max = a.series.size();
    if (!cfg.universe_path.empty()) {
        const Universe universe = load_universe(cfg.universe_path);
        for (const auto& entry : universe.entries)
            n_max = std::max(n_max,
                             load_series(entry.ticker, cfg.data_dir, cfg.from, cfg.to).size());
    }
    const double score = compression_score_value(a.stats.ratio_percent, a.sgn, a.series.size(),
                                                 n_max, cfg.length_adjust);
    std::ostringstream out;
    out << "ticker: " << ticker << '\n'
        << "n: " << a.series.size() << '\n'
        << "l_src: " << a.stats.l_src << '\n'
        << "l_cod: " << a.stats.l_cod << '\n'
        << "l_abc: " << a.stats.l_abc << '\n'
        << "ratio_percent: "
        << format_number(a.stats.ratio_percent, cfg.render.decimal_places, cfg.render.locale_comma)
        << '\n'
        << "sgn: " << (a.sgn > 0 ? "+1" : "-1") << '\n'
        << "score: "
        << format_number(score, cfg.render.decimal_places, cfg.render.locale_comma) << '\n';
    return out.str();
}

int run_fetch(const RunConfig& config, std::ostream& log) {
    RunConfig cfg = config;
    resolve_window(cfg.from, cfg.to);
    if (cfg.provider_url.empty()) throw ProviderError("provider not configured");

    const Universe universe = load_universe(cfg.universe_path);
    const ProviderConfig provider{cfg.provider_url};
    int failures = 0;
    for (const auto& entry : universe.entries) {
        try {
            fetch_series(entry.ticker, provider, cfg.data_dir, cfg.from, cfg.to);
            log << entry.ticker << ": ok\n";
        } catch (const std::exception& e) {
            log << entry.ticker << ": FAILED: " << e.what() << '\n';
            ++failures;
        }
    }
    log << (universe.entries.size() - failures) << '/' << universe.entries.size()
        << " tickers fetched\n";
    return failures;
}

} // namespace ternrank
