#include "cinkra/monomial.hpp"

#include <bit>
#include <stdexcept>

namespace cinkra {

int multiply_sign(const BitWord& x, const BitWord& y) {
    if (x.length() != y.length()) throw std::invalid_argument("monomial length mismatch");
    int swaps = 0;
    std::uint64_t rest = y.mask();
    while (rest) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(x.mask() >> (j + 1));
    }
    return (swaps % 2 == 0) ? +1 : -1;
}

SignedMonomial multiply(const SignedMonomial& a, const SignedMonomial& b) {
    return {a.sign * b.sign * multiply_sign(a.exponent, b.exponent), a.exponent ^ b.exponent};
}

int square_sign(const BitWord& x) {
    const int w = x.weight() % 4;
    return (w == 0 || w == 1) ? +1 : -1;
}

int left_gamma_sign(int color, const BitWord& x) {
    if (color < 0 || color >= x.length()) throw std::invalid_argument("color index out of range");
    const std::uint64_t below = color == 0 ? 0 : x.mask() & ((1ull << color) - 1);
    return (std::popcount(below) % 2 == 0) ? +1 : -1;
}

SignedMonomial left_gamma(int color, const SignedMonomial& m) {
    return {m.sign * left_gamma_sign(color, m.exponent), m.exponent.flipped(color)};
}

std::string to_string(const SignedMonomial& m) {
    return (m.sign < 0 ? "-G_" : "+G_") + m.exponent.str();
}

ProjectorProduct projector_product(std::vector<BitWord> generators, std::vector<int> signs) {
    if (generators.size() != signs.size())
        throw std::invalid_argument("one sign per projector generator required");
    for (int s : signs)
        if (s != +1 && s != -1) throw std::invalid_argument("projector signs must be +1 or -1");
    for (const auto& g : generators)
        if (g.weight() % 4 != 0)
            throw std::invalid_argument("projector word weight must be a multiple of 4: " + g.str());
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if ((generators[i] & generators[j]).weight() % 2 != 0)
                throw std::invalid_argument("projectors do not commute: " + generators[i].str() +
                                            ", " + generators[j].str());
    return {std::move(generators), std::move(signs)};
}

}  // namespace cinkra
