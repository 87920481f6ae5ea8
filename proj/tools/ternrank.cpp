#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ternrank/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitProvider = 2;

void add_common_options(CLI::App* cmd, ternrank::RunConfig& config, std::string& format,
                        std::string& length_adjust) {
    cmd->add_option("--universe", config.universe_path, "Universe CSV (ticker,company)");
    cmd->add_option("--data-dir", config.data_dir, "Directory with per-ticker CSV files")
        ->default_val(".");
    cmd->add_option("--from", config.from, "Window start, YYYY-MM-DD (default: 5 years back)");
    cmd->add_option("--to", config.to, "Window end, YYYY-MM-DD (default: today)");
    cmd->add_option("--length-adjust", length_adjust, "Score length adjustment")
        ->check(CLI::IsMember({"plain", "minus-one"}))
        ->default_val("plain");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "csv", "md"}))
        ->default_val("tsv");
    cmd->add_option("--out", config.out_path, "Output file (default: stdout)");
    cmd->add_flag("--locale-comma", config.render.locale_comma,
                  "Use comma as the decimal separator");
    cmd->add_option("--decimal-places", config.render.decimal_places, "Decimals in numeric cells")
        ->default_val(8);
    cmd->add_option("--sparkline-width", config.render.sparkline_width,
                    "Microchart width in glyphs")
        ->default_val(20);
}

void apply_parsed(ternrank::RunConfig& config, const std::string& format,
                  const std::string& length_adjust) {
    config.render.format = format == "csv"   ? ternrank::OutputFormat::csv
                           : format == "md" ? ternrank::OutputFormat::markdown
                                            : ternrank::OutputFormat::tsv;
    config.length_adjust = length_adjust == "minus-one" ? ternrank::LengthAdjust::minus_one
                                                        : ternrank::LengthAdjust::plain;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ternrank::InputError("cannot write " + out_path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ranks exchange-traded instruments by a compression indicator of their "
                 "symbolized price-change series"};
    app.require_subcommand(1);

    ternrank::RunConfig config;
    std::string format = "tsv";
    std::string length_adjust = "plain";
    std::string compress_ticker;

    auto* rank = app.add_subcommand("rank", "Compute the full ranking listing");
    add_common_options(rank, config, format, length_adjust);
    rank->get_option("--universe")->required();

    auto* vol = app.add_subcommand("volatility", "Compute the volatility comparison table");
    add_common_options(vol, config, format, length_adjust);
    vol->get_option("--universe")->required();

    auto* compress = app.add_subcommand("compress", "Per-ticker compression diagnostics");
    compress->add_option("ticker", compress_ticker, "Ticker symbol")->required();
    add_common_options(compress, config, format, length_adjust);

    auto* fetch = app.add_subcommand("fetch", "Fetch universe data into the cache");
    add_common_options(fetch, config, format, length_adjust);
    fetch->get_option("--universe")->required();
    fetch->add_option("--provider", config.provider_url,
                      "Provider URL template with {ticker},{from},{to}")
        ->envname("TERNRANK_PROVIDER_URL");

    CLI11_PARSE(app, argc, argv);
    apply_parsed(config, format, length_adjust);

    try {
        if (rank->parsed()) {
            emit(ternrank::run_rank(config), config.out_path);
        } else if (vol->parsed()) {
            emit(ternrank::run_volatility(config), config.out_path);
        } else if (compress->parsed()) {
            emit(ternrank::run_compress(compress_ticker, config), config.out_path);
        } else if (fetch->parsed()) {
            if (ternrank::run_fetch(config, std::cout) != 0) return kExitProvider;
        }
    } catch (const ternrank::ProviderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitProvider;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
