#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ternrank/error.hpp"
#include "ternrank/transform.hpp"

namespace ternrank {

// Bit container, MSB-first within each byte.
class BitString {
public:
    void push(bool bit);
    bool get(std::size_t i) const;
    std::size_t size() const { return bit_count_; }
    bool empty() const { return bit_count_ == 0; }
    std::string to_string() const; // '0'/'1' text, for diagnostics

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_count_ = 0;
};

// Canonical minimum-redundancy prefix code over the distinct letters of a
// SymbolSeries. Codewords are prefix-free; more frequent letters never get
// longer codes; ties are broken by sorted letter order so the model rebuilds
// identically from the same letter multiset.
struct CodecModel {
    std::vector<std::string> alphabet;       // sorted, distinct
    std::vector<std::uint64_t> counts;       // occurrences per letter
    std::vector<int> code_lengths;           // bits per letter
    std::vector<std::uint64_t> codewords;    // MSB-aligned within code_lengths bits

    std::size_t alphabet_size() const { return alphabet.size(); }
    // Index of a letter in the alphabet, or -1 when absent.
    int index_of(const std::string& letter) const;
};

struct CompressionStats {
    std::uint64_t l_src = 0; // 8 bits per source character
    std::uint64_t l_cod = 0; // coded bit length
    std::uint64_t l_abc = 0; // 24 bits per distinct letter
    double ratio_percent = 0.0; // (l_cod + l_abc) / l_src * 100
};

// Splits a character string into consecutive XYZ letters.
SymbolSeries tokenize(const std::string& s);

CodecModel build_model(const SymbolSeries& letters);

BitString encode(const SymbolSeries& letters, const CodecModel& model);

// Inverse of encode; `count` is the expected letter count.
SymbolSeries decode(const BitString& bits, const CodecModel& model, std::size_t count);

// Tokenize + model + encode, reduced to the three bit lengths and their ratio.
CompressionStats compression_stats(const std::string& s);

// Debug view: `letter,count,length,codeword` rows.
std::string dump_model_csv(const CodecModel& model);

} // namespace ternrank
