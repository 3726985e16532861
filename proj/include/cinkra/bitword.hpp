#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace cinkra {

// Fixed-length word over {0,1}. Position 0 is the leftmost character of the
// printed string, so "1100" has bits 0 and 1 set. Stored as a single machine
// word; lengths up to 64 are supported, which covers codewords, cube vertices
// and monomial exponents at the scales this library targets.
class BitWord {
  public:
    BitWord() = default;
    explicit BitWord(int length);
    BitWord(int length, std::uint64_t bits);

    // Parses a string of '0'/'1' characters. Throws ParseError otherwise.
    static BitWord parse(std::string_view s);
    // Standard basis word e_index: a single 1 at the given position.
    static BitWord unit(int length, int index);
    static BitWord ones(int length);

    int length() const { return length_; }
    bool bit(int i) const;
    BitWord with_bit(int i, bool value) const;
    BitWord flipped(int i) const;

    int weight() const;
    bool zero() const { return bits_ == 0; }
    std::uint64_t mask() const { return bits_; }

    // Coordinatewise sum mod 2 / product. Operands must have equal length.
    BitWord operator^(const BitWord& other) const;
    BitWord operator&(const BitWord& other) const;

    bool operator==(const BitWord&) const = default;

    // String order ("0111" < "1000"); lengths compared first.
    bool lex_less(const BitWord& other) const;
    bool operator<(const BitWord& other) const { return lex_less(other); }

    std::string str() const;

  private:
    void check_same_length(const BitWord& other) const;

    std::uint64_t bits_ = 0;
    int length_ = 0;
};

}  // namespace cinkra

template <>
struct std::hash<cinkra::BitWord> {
    std::size_t operator()(const cinkra::BitWord& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.mask() * 0x9e3779b97f4a7c15ull ^
                                          static_cast<std::uint64_t>(w.length()));
    }
};
