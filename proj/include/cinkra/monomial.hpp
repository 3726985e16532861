#pragma once

#include <string>
#include <vector>

#include "cinkra/bitword.hpp"

namespace cinkra {

// sign * G_1^{x_1} ... G_n^{x_n} in Cl(0,n), factors kept in ascending index
// order at all times so equality is a plain field comparison. Signs are +1/-1
// integers throughout, matching matrix entries.
struct SignedMonomial {
    int sign = +1;
    BitWord exponent;

    bool operator==(const SignedMonomial&) const = default;
};

inline SignedMonomial gamma(const BitWord& exponent) { return {+1, exponent}; }

// Sign picked up when normalizing G_x * G_y: each generator of the right
// factor anticommutes past the higher-index generators of the left factor,
// and doubled generators square to +1.
int multiply_sign(const BitWord& x, const BitWord& y);

SignedMonomial multiply(const SignedMonomial& a, const SignedMonomial& b);

// Sign of (G_x)^2: +1 when wt(x) is 0 or 1 mod 4, else -1.
int square_sign(const BitWord& x);

// Sign of G_color * G_x (color is a 0-based index): -1 raised to the number
// of set positions of x below color.
int left_gamma_sign(int color, const BitWord& x);

SignedMonomial left_gamma(int color, const SignedMonomial& m);

// "+G_0011" / "-G_1100"
std::string to_string(const SignedMonomial& m);

// Symbolic product pi_{g_1,s_1} ... pi_{g_k,s_k} of projections
// pi_{x,±} = (1 ± G_x)/2. Never expanded into algebra sums; the quotient
// construction only needs the (generator, sign) pairs.
struct ProjectorProduct {
    std::vector<BitWord> generators;
    std::vector<int> signs;  // +1 / -1 per generator
};

// Validates idempotence (every weight a multiple of 4) and pairwise
// commutation (even intersection weights). Throws std::invalid_argument.
ProjectorProduct projector_product(std::vector<BitWord> generators, std::vector<int> signs);

}  // namespace cinkra
