#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psl {

using spin = std::int8_t;

// Sums of fourth powers of sidelobes can pass 2^64 once n reaches the
// tens of thousands, so the fitness accumulator is 128 bits and exact.
using fitness_value = unsigned __int128;

std::string fitness_to_string(fitness_value value);
fitness_value fitness_from_string(std::string_view text);

class rng64;

// A +/-1 sequence of length at least 2.
class binary_sequence {
public:
    binary_sequence() = default;  // empty placeholder, not usable until assigned
    explicit binary_sequence(std::vector<spin> values);

    static binary_sequence all_ones(std::size_t n);
    static binary_sequence random(std::size_t n, rng64& gen);

    std::size_t size() const noexcept { return values_.size(); }
    spin operator[](std::size_t i) const { return values_[i]; }
    const spin* data() const noexcept { return values_.data(); }
    spin* data() noexcept { return values_.data(); }

    void negate(std::size_t i) { values_[i] = static_cast<spin>(-values_[i]); }

    bool operator==(const binary_sequence&) const = default;

private:
    std::vector<spin> values_;
};

// The n-1 sidelobes of a length-n sequence ordered by increasing overlap:
// values()[i] is the correlation with i+1 overlapping terms, i.e. the
// autocorrelation at shift n-1-i.
class sidelobe_array {
public:
    sidelobe_array() = default;
    sidelobe_array(std::vector<std::int32_t> values, std::size_t owner_length);

    std::size_t size() const noexcept { return values_.size(); }
    std::size_t owner_length() const noexcept { return owner_length_; }
    std::int32_t operator[](std::size_t i) const { return values_[i]; }
    const std::int32_t* data() const noexcept { return values_.data(); }
    std::int32_t* data() noexcept { return values_.data(); }

    bool operator==(const sidelobe_array&) const = default;

private:
    std::vector<std::int32_t> values_;
    std::size_t owner_length_ = 0;
};

struct cost_report {
    fitness_value fitness = 0;  // sum of fourth powers of all sidelobes
    std::int32_t psl = 0;       // max absolute sidelobe, the beacon value

    bool operator==(const cost_report&) const = default;
};

// Aperiodic autocorrelation at the given shift; shift 0 is the mainlobe n.
std::int32_t compute_aacf(const binary_sequence& seq, std::size_t shift);

// All n-1 sidelobes from the definition, O(n^2). Run once per sequence;
// afterwards the flip engine keeps the array current in O(n) per flip.
sidelobe_array compute_sidelobes(const binary_sequence& seq);

// One pass over the sidelobe array: exact quartic fitness plus the peak
// level picked up in the same loop.
cost_report evaluate(const sidelobe_array& sidelobes);

// Peak sidelobe level straight from the correlation definition, bypassing
// the sidelobe-array ordering. Used to cross-check the rearrangement.
std::int32_t psl_direct(const binary_sequence& seq);

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position);
    // 1-based character position of the offending input
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Text form: a single line over one of the two alphabets '+'/'-' or
// '1'/'0' ('1' meaning +1). The first character picks the alphabet.
// Writers always emit '+'/'-'.
binary_sequence parse_sequence_text(std::string_view text);
std::string sequence_to_text(const binary_sequence& seq);

binary_sequence read_sequence_file(const std::string& path);
void write_sequence_file(const binary_sequence& seq, const std::string& path);

}  // namespace psl
