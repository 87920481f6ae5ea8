#include "ternrank/codec.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace ternrank {

void BitString::push(bool bit) {
    if (bit_count_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
    ++bit_count_;
}

bool BitString::get(std::size_t i) const {
    assert(i < bit_count_);
    return (bytes_[i / 8] & (0x80u >> (i % 8))) != 0;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bit_count_);
    for (std::size_t i = 0; i < bit_count_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

int CodecModel::index_of(const std::string& letter) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
    if (it == alphabet.end() || *it != letter) return -1;
    return static_cast<int>(it - alphabet.begin());
}

namespace {

bool valid_letter(const char* p) {
    const bool sign_ok = p[0] == '-' || p[0] == '~' || p[0] == '+';
    const bool digits_ok = std::isdigit(static_cast<unsigned char>(p[1])) != 0 &&
                           std::isdigit(static_cast<unsigned char>(p[2])) != 0;
    if (!sign_ok || !digits_ok) return false;
    if (p[0] == '~' && (p[1] != '0' || p[2] != '0')) return false;
    return true;
}

// Huffman code lengths via the two-queue method on pre-sorted leaves.
// Leaves arrive ascending by (count, letter), so the lengths are a pure
// function of the letter multiset.
std::vector<int> huffman_lengths(const std::vector<std::uint64_t>& sorted_counts) {
    const std::size_t k = sorted_counts.size();
    std::vector<int> depth(k, 0);
    if (k == 1) return {1}; // degenerate alphabet still needs a usable code
    struct Node {
        std::uint64_t weight;
        std::vector<std::size_t> leaves; // leaf indices under this node
    };
    std::deque<Node> leaves;
    std::deque<Node> merged;
    for (std::size_t i = 0; i < k; ++i) leaves.push_back({sorted_counts[i], {i}});

    auto pop_min = [&]() -> Node {
        // On equal weights prefer the leaf queue.
        if (!leaves.empty() && (merged.empty() || leaves.front().weight <= merged.front().weight)) {
            Node n = std::move(leaves.front());
            leaves.pop_front();
            return n;
        }
        Node n = std::move(merged.front());
        merged.pop_front();
        return n;
    };

    while (leaves.size() + merged.size() > 1) {
        Node a = pop_min();
        Node b = pop_min();
        for (std::size_t i : a.leaves) ++depth[i];
        for (std::size_t i : b.leaves) ++depth[i];
        Node parent{a.weight + b.weight, std::move(a.leaves)};
        parent.leaves.insert(parent.leaves.end(), b.leaves.begin(), b.leaves.end());
        merged.push_back(std::move(parent));
    }
    return depth;
}

} // namespace

SymbolSeries tokenize(const std::string& s) {
    if (s.size() % 3 != 0) throw InputError("length not multiple of 3");
    SymbolSeries letters;
    letters.reserve(s.size() / 3);
    for (std::size_t i = 0; i < s.size(); i += 3) {
        if (!valid_letter(s.data() + i))
            throw InputError("malformed triple '" + s.substr(i, 3) + "' at offset " +
                             std::to_string(i));
        letters.push_back(s.substr(i, 3));
    }
    return letters;
}

CodecModel build_model(const SymbolSeries& letters) {
    if (letters.empty()) throw InputError("cannot build a code over an empty series");

    std::map<std::string, std::uint64_t> freq;
    for (const auto& letter : letters) ++freq[letter];

    CodecModel model;
    for (const auto& [letter, count] : freq) {
        model.alphabet.push_back(letter);
        model.counts.push_back(count);
    }

    // Length computation runs over leaves sorted ascending by (count, letter).
    const std::size_t k = model.alphabet.size();
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (model.counts[a] != model.counts[b]) return model.counts[a] < model.counts[b];
        return model.alphabet[a] < model.alphabet[b];
    });
    std::vector<std::uint64_t> sorted_counts(k);
    for (std::size_t i = 0; i < k; ++i) sorted_counts[i] = model.counts[order[i]];
    const std::vector<int> sorted_lengths = huffman_lengths(sorted_counts);
    model.code_lengths.resize(k);
    for (std::size_t i = 0; i < k; ++i) model.code_lengths[order[i]] = sorted_lengths[i];

    // Canonical codeword assignment: (length, letter) ascending.
    std::vector<std::size_t> canon(order);
    std::sort(canon.begin(), canon.end(), [&](std::size_t a, std::size_t b) {
        if (model.code_lengths[a] != model.code_lengths[b])
            return model.code_lengths[a] < model.code_lengths[b];
        return model.alphabet[a] < model.alphabet[b];
    });
    model.codewords.resize(k);
    std::uint64_t code = 0;
    int prev_len = model.code_lengths[canon.front()];
    assert(prev_len <= 63);
    for (std::size_t i = 0; i < k; ++i) {
        const int len = model.code_lengths[canon[i]];
        code <<= (len - prev_len);
        model.codewords[canon[i]] = code;
        ++code;
        prev_len = len;
    }
    return model;
}

BitString encode(const SymbolSeries& letters, const CodecModel& model) {
    BitString bits;
    for (const auto& letter : letters) {
        const int idx = model.index_of(letter);
        if (idx < 0) throw InputError("letter '" + letter + "' absent from model");
        const int len = model.code_lengths[idx];
        const std::uint64_t code = model.codewords[idx];
        for (int b = len - 1; b >= 0; --b) bits.push(((code >> b) & 1u) != 0);
    }
    return bits;
}

SymbolSeries decode(const BitString& bits, const CodecModel& model, std::size_t count) {
    std::map<std::pair<int, std::uint64_t>, std::size_t> table;
    for (std::size_t i = 0; i < model.alphabet_size(); ++i)
        table[{model.code_lengths[i], model.codewords[i]}] = i;

    SymbolSeries out;
    out.reserve(count);
    std::size_t pos = 0;
    while (out.size() < count) {
        std::uint64_t value = 0;
        int len = 0;
        for (;;) {
            if (pos == bits.size()) throw InputError("unexpected end of stream");
            value = (value << 1) | static_cast<std::uint64_t>(bits.get(pos++));
            ++len;
            auto it = table.find({len, value});
            if (it != table.end()) {
                out.push_back(model.alphabet[it->second]);
                break;
            }
        }
    }
    if (pos != bits.size())
        throw InputError("trailing bits after decoding " + std::to_string(count) + " letters");
    return out;
}

CompressionStats compression_stats(const std::string& s) {
    const SymbolSeries letters = tokenize(s);
    const CodecModel model = build_model(letters);

    CompressionStats stats;
    stats.l_src = 8ull * s.size();
    stats.l_abc = 24ull * model.alphabet_size();
    for (std::size_t i = 0; i < model.alphabet_size(); ++i)
        stats.l_cod += model.counts[i] * static_cast<std::uint64_t>(model.code_lengths[i]);
    stats.ratio_percent =
        static_cast<double>(stats.l_cod + stats.l_abc) / static_cast<double>(stats.l_src) * 100.0;
    return stats;
}

std::string dump_model_csv(const CodecModel& model) {
    std::ostringstream out;
    out << "letter,count,length,codeword\n";
    for (std::size_t i = 0; i < model.alphabet_size(); ++i) {
        out << model.alphabet[i] << ',' << model.counts[i] << ',' << model.code_lengths[i] << ',';
        for (int b = model.code_lengths[i] - 1; b >= 0; --b)
            out << (((model.codewords[i] >> b) & 1u) != 0 ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

} // namespace ternrank
