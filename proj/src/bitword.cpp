#include "cinkra/bitword.hpp"

#include <bit>
#include <stdexcept>

#include "cinkra/errors.hpp"

namespace cinkra {

namespace {
constexpr int kMaxLength = 64;

std::uint64_t length_mask(int length) {
    return length == 64 ? ~0ull : (1ull << length) - 1;
}
}  // namespace

BitWord::BitWord(int length) : bits_(0), length_(length) {
    if (length < 0 || length > kMaxLength)
        throw std::invalid_argument("BitWord length out of range: " + std::to_string(length));
}

BitWord::BitWord(int length, std::uint64_t bits) : BitWord(length) {
    bits_ = bits & length_mask(length);
    if (bits_ != bits) throw std::invalid_argument("BitWord bits exceed length");
}

BitWord BitWord::parse(std::string_view s) {
    if (s.size() > kMaxLength) throw ParseError("bit string longer than 64");
    BitWord w(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.bits_ |= 1ull << i;
        else if (s[i] != '0')
            throw ParseError("bit string may contain only '0' and '1'");
    }
    return w;
}

BitWord BitWord::unit(int length, int index) {
    BitWord w(length);
    if (index < 0 || index >= length)
        throw std::invalid_argument("unit index out of range");
    w.bits_ = 1ull << index;
    return w;
}

BitWord BitWord::ones(int length) {
    BitWord w(length);
    w.bits_ = length_mask(length);
    return w;
}

bool BitWord::bit(int i) const {
    if (i < 0 || i >= length_) throw std::invalid_argument("bit index out of range");
    return (bits_ >> i) & 1;
}

BitWord BitWord::with_bit(int i, bool value) const {
    if (i < 0 || i >= length_) throw std::invalid_argument("bit index out of range");
    BitWord w = *this;
    if (value)
        w.bits_ |= 1ull << i;
    else
        w.bits_ &= ~(1ull << i);
    return w;
}

BitWord BitWord::flipped(int i) const {
    if (i < 0 || i >= length_) throw std::invalid_argument("bit index out of range");
    BitWord w = *this;
    w.bits_ ^= 1ull << i;
    return w;
}

int BitWord::weight() const { return std::popcount(bits_); }

void BitWord::check_same_length(const BitWord& other) const {
    if (length_ != other.length_)
        throw std::invalid_argument("BitWord length mismatch: " + std::to_string(length_) +
                                    " vs " + std::to_string(other.length_));
}

BitWord BitWord::operator^(const BitWord& other) const {
    check_same_length(other);
    BitWord w = *this;
    w.bits_ ^= other.bits_;
    return w;
}

BitWord BitWord::operator&(const BitWord& other) const {
    check_same_length(other);
    BitWord w = *this;
    w.bits_ &= other.bits_;
    return w;
}

bool BitWord::lex_less(const BitWord& other) const {
    if (length_ != other.length_) return length_ < other.length_;
    std::uint64_t diff = bits_ ^ other.bits_;
    if (diff == 0) return false;
    // The lowest differing machine bit is the leftmost differing character.
    int i = std::countr_zero(diff);
    return ((bits_ >> i) & 1) == 0;
}

std::string BitWord::str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

}  // namespace cinkra
