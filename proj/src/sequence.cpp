#include "psl/sequence.hpp"

#include "psl/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace psl {

std::string fitness_to_string(fitness_value value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    return {digits.rbegin(), digits.rend()};
}

fitness_value fitness_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty fitness string");
    constexpr fitness_value max = ~fitness_value{0};
    fitness_value acc = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("fitness string contains a non-digit");
        const unsigned d = static_cast<unsigned>(c - '0');
        if (acc > (max - d) / 10) throw std::out_of_range("fitness string overflows");
        acc = acc * 10 + d;
    }
    return acc;
}

binary_sequence::binary_sequence(std::vector<spin> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw std::invalid_argument("sequence length must be at least 2");
    for (spin s : values_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sequence elements must be +1 or -1");
}

binary_sequence binary_sequence::all_ones(std::size_t n) {
    return binary_sequence(std::vector<spin>(n, spin{1}));
}

binary_sequence binary_sequence::random(std::size_t n, rng64& gen) {
    if (n < 2) throw std::invalid_argument("sequence length must be at least 2");
    std::vector<spin> s(n);
    std::uint64_t bits = 0;
    unsigned left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (left == 0) {
            bits = gen.next();
            left = 64;
        }
        s[i] = (bits & 1) ? spin{1} : spin{-1};
        bits >>= 1;
        --left;
    }
    return binary_sequence(std::move(s));
}

sidelobe_array::sidelobe_array(std::vector<std::int32_t> values, std::size_t owner_length)
    : values_(std::move(values)), owner_length_(owner_length) {
    if (owner_length_ < 2 || values_.size() != owner_length_ - 1)
        throw std::invalid_argument("sidelobe array must have owner length minus one entries");
}

std::int32_t compute_aacf(const binary_sequence& seq, std::size_t shift) {
    const std::size_t n = seq.size();
    if (shift >= n) throw std::invalid_argument("autocorrelation shift out of range");
    const spin* s = seq.data();
    std::int32_t acc = 0;
    for (std::size_t j = 0; j + shift < n; ++j)
        acc += static_cast<std::int32_t>(s[j]) * s[j + shift];
    return acc;
}

sidelobe_array compute_sidelobes(const binary_sequence& seq) {
    const std::size_t n = seq.size();
    std::vector<std::int32_t> values(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
        values[i] = compute_aacf(seq, n - 1 - i);
    return sidelobe_array(std::move(values), n);
}

cost_report evaluate(const sidelobe_array& sidelobes) {
    fitness_value fitness = 0;
    std::int32_t peak = 0;
    const std::int32_t* v = sidelobes.data();
    const std::size_t m = sidelobes.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::int32_t c = v[i];
        const std::int32_t a = c < 0 ? -c : c;
        if (a > peak) peak = a;
        const std::uint64_t sq = static_cast<std::uint64_t>(static_cast<std::int64_t>(c) * c);
        fitness += static_cast<fitness_value>(sq) * sq;
    }
    return {fitness, peak};
}

std::int32_t psl_direct(const binary_sequence& seq) {
    const std::size_t n = seq.size();
    std::int32_t peak = 0;
    for (std::size_t u = 1; u < n; ++u) {
        const std::int32_t c = compute_aacf(seq, u);
        const std::int32_t a = c < 0 ? -c : c;
        if (a > peak) peak = a;
    }
    return peak;
}

parse_error::parse_error(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

binary_sequence parse_sequence_text(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty sequence", 1);

    char plus;
    char minus;
    switch (text.front()) {
        case '+':
        case '-':
            plus = '+';
            minus = '-';
            break;
        case '1':
        case '0':
            plus = '1';
            minus = '0';
            break;
        default:
            throw parse_error(std::string("unexpected character '") + text.front() + "'", 1);
    }

    std::vector<spin> values(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == plus)
            values[i] = 1;
        else if (text[i] == minus)
            values[i] = -1;
        else
            throw parse_error(std::string("unexpected character '") + text[i] + "'", i + 1);
    }
    if (values.size() < 2) throw parse_error("sequence length must be at least 2", 1);
    return binary_sequence(std::move(values));
}

std::string sequence_to_text(const binary_sequence& seq) {
    std::string out(seq.size(), '+');
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] < 0) out[i] = '-';
    return out;
}

binary_sequence read_sequence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    // one line only: anything beyond the first line break must be blank
    const std::size_t eol = content.find('\n');
    if (eol != std::string::npos) {
        for (std::size_t i = eol + 1; i < content.size(); ++i)
            if (content[i] != '\n' && content[i] != '\r')
                throw parse_error("trailing content after sequence line", i + 1);
    }
    return parse_sequence_text(content);
}

void write_sequence_file(const binary_sequence& seq, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << sequence_to_text(seq) << '\n';
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace psl
