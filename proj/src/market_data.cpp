#include "ternrank/market_data.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <httplib.h>

namespace fs = std::filesystem;

namespace ternrank {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
    while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(strip(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool is_iso_date(const std::string& d) {
    if (d.size() != 10 || d[4] != '-' || d[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (std::isdigit(static_cast<unsigned char>(d[i])) == 0) return false;
    return true;
}

double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("cannot parse " + what + ": '" + s + "'");
    return v;
}

} // namespace

void InstrumentSeries::validate() const {
    if (dates.size() != close.size() || dates.size() != volume.size())
        throw InputError(ticker + ": column lengths differ");
    if (dates.size() < 2)
        throw InputError(ticker + ": fewer than 2 rows");
    for (std::size_t i = 0; i < dates.size(); ++i) {
        if (!is_iso_date(dates[i]))
            throw InputError(ticker + ": bad date '" + dates[i] + "'");
        if (i > 0 && !(dates[i - 1] < dates[i]))
            throw InputError(ticker + ": non-monotonic dates at '" + dates[i] + "'");
        if (!(close[i] > 0.0))
            throw InputError(ticker + ": non-positive price at " + dates[i]);
        if (volume[i] < 0.0)
            throw InputError(ticker + ": negative volume at " + dates[i]);
    }
}

Universe load_universe(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open universe file: " + path);

    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"ticker", "company"})
        throw InputError("universe file missing `ticker,company` header: " + path);

    Universe u;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() < 2)
            throw InputError("universe row needs ticker and company: '" + line + "'");
        if (fields[0].empty())
            throw InputError("empty ticker field in universe: '" + line + "'");
        if (!seen.insert(fields[0]).second)
            throw InputError("duplicate ticker " + fields[0]);
        u.entries.push_back({fields[0], fields[1]});
    }
    if (u.entries.empty()) throw InputError("empty universe: " + path);
    return u;
}

InstrumentSeries load_series(const std::string& ticker, const std::string& data_dir,
                             const std::string& from, const std::string& to) {
    const fs::path path = fs::path(data_dir) / (ticker + ".csv");
    std::ifstream in(path);
    if (!in) throw InputError(ticker + ": cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) != std::vector<std::string>{"date", "close", "volume"})
        throw InputError(ticker + ": missing `date,close,volume` header");

    InstrumentSeries s;
    s.ticker = ticker;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 3)
            throw InputError(ticker + ": expected 3 fields, got '" + line + "'");
        const std::string& date = fields[0];
        if (!is_iso_date(date))
            throw InputError(ticker + ": bad date '" + date + "'");
        // ISO dates compare correctly as strings; window is inclusive.
        if (!from.empty() && date < from) continue;
        if (!to.empty() && date > to) continue;
        s.dates.push_back(date);
        s.close.push_back(parse_double(fields[1], ticker + " close"));
        s.volume.push_back(parse_double(fields[2], ticker + " volume"));
    }
    if (s.dates.size() < 2)
        throw InputError(ticker + ": fewer than 2 rows in window [" + from + ", " + to + "]");
    for (double c : s.close)
        if (!(c > 0.0)) throw InputError(ticker + ": non-positive price");
    s.validate();
    return s;
}

std::string series_to_csv(const InstrumentSeries& series) {
    std::ostringstream out;
    out << "date,close,volume\n";
    out.precision(15);
    for (std::size_t i = 0; i < series.size(); ++i)
        out << series.dates[i] << ',' << series.close[i] << ',' << series.volume[i] << '\n';
    return out.str();
}

namespace {

std::string expand_template(std::string url, const std::string& ticker,
                            const std::string& from, const std::string& to) {
    auto replace_all = [&url](const std::string& key, const std::string& value) {
        for (std::size_t pos = url.find(key); pos != std::string::npos; pos = url.find(key, pos))
            url.replace(pos, key.size(), value), pos += value.size();
    };
    replace_all("{ticker}", ticker);
    replace_all("{from}", from);
    replace_all("{to}", to);
    return url;
}

// scheme://host[:port]/path -> (origin, path)
std::pair<std::string, std::string> split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ProviderError("provider: bad URL '" + url + "'");
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace

void fetch_series(const std::string& ticker, const ProviderConfig& provider,
                  const std::string& data_dir, const std::string& from, const std::string& to) {
    if (provider.url_template.empty()) throw ProviderError("provider not configured");

    const std::string url = expand_template(provider.url_template, ticker, from, to);
    auto [origin, path] = split_url(url);

    httplib::Client client(origin);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) throw ProviderError("provider: request failed for " + ticker);
    if (res->status == 404) throw ProviderError("provider: not found: " + ticker);
    if (res->status != 200)
        throw ProviderError("provider: HTTP " + std::to_string(res->status) + " for " + ticker);

    // Validate the schema before touching the cache.
    std::istringstream body(res->body);
    std::string header;
    if (!std::getline(body, header) ||
        split_csv_line(header) != std::vector<std::string>{"date", "close", "volume"})
        throw ProviderError("provider: bad schema for " + ticker);

    fs::create_directories(data_dir);
    const fs::path out_path = fs::path(data_dir) / (ticker + ".csv");
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ProviderError("cannot write " + out_path.string());
    out << res->body;
}

} // namespace ternrank
