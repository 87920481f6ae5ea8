#pragma once

#include <stdexcept>
#include <string>

namespace ternrank {

// Input / validation failures: bad CSV, broken invariants, unknown tickers.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data-provider failures: network errors, HTTP error statuses, bad payloads.
class ProviderError : public std::runtime_error {
public:
    explicit ProviderError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ternrank
