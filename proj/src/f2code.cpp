#include "cinkra/f2code.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cinkra/errors.hpp"

namespace cinkra {

namespace {

int pivot_of(const BitWord& w) {
    // Lowest machine bit = leftmost printed position.
    return std::countr_zero(w.mask());
}

// Inserts w into RREF rows, keeping full reduction. No-op if dependent.
void rref_insert(std::vector<BitWord>& rows, BitWord w) {
    for (const auto& row : rows)
        if (!w.zero() && w.bit(pivot_of(row))) w = w ^ row;
    if (w.zero()) return;
    for (auto& row : rows)
        if (row.bit(pivot_of(w))) row = row ^ w;
    rows.push_back(w);
    std::sort(rows.begin(), rows.end(),
              [](const BitWord& a, const BitWord& b) { return pivot_of(a) < pivot_of(b); });
}

}  // namespace

LinearCode::LinearCode(int length) : length_(length) {
    if (length < 0 || length > 64) throw std::invalid_argument("code length out of range");
}

LinearCode LinearCode::from_generators(int length, const std::vector<BitWord>& generators) {
    LinearCode code(length);
    for (const auto& g : generators) {
        if (g.length() != length) throw std::invalid_argument("generator length mismatch");
        rref_insert(code.rows_, g);
    }
    return code;
}

std::vector<BitWord> LinearCode::codewords() const {
    std::vector<BitWord> words{BitWord(length_)};
    words.reserve(codeword_count());
    for (const auto& row : rows_) {
        const std::size_t count = words.size();
        for (std::size_t i = 0; i < count; ++i) words.push_back(words[i] ^ row);
    }
    std::sort(words.begin(), words.end());
    return words;
}

bool LinearCode::contains(const BitWord& w) const {
    if (w.length() != length_) throw std::invalid_argument("word length mismatch");
    BitWord r = w;
    for (const auto& row : rows_)
        if (!r.zero() && r.bit(pivot_of(row))) r = r ^ row;
    return r.zero();
}

std::optional<int> LinearCode::min_weight() const {
    std::optional<int> best;
    for (const auto& w : codewords()) {
        if (w.zero()) continue;
        if (!best || w.weight() < *best) best = w.weight();
    }
    return best;
}

bool LinearCode::operator<(const LinearCode& other) const {
    if (length_ != other.length_) return length_ < other.length_;
    if (rows_.size() != other.rows_.size()) return rows_.size() < other.rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] != other.rows_[i]) return rows_[i] < other.rows_[i];
    return false;
}

bool is_even(const LinearCode& code) {
    for (const auto& g : code.generators())
        if (g.weight() % 2 != 0) return false;
    return true;
}

bool is_doubly_even(const LinearCode& code) {
    const auto& gens = code.generators();
    for (const auto& g : gens)
        if (g.weight() % 4 != 0) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if ((gens[i] & gens[j]).weight() % 2 != 0) return false;
    return true;
}

std::vector<BitWord> span(int length, const std::vector<BitWord>& generators) {
    return LinearCode::from_generators(length, generators).codewords();
}

std::vector<BitWord> standard_code_rows(CodeFamily family, int n) {
    std::vector<BitWord> rows;
    switch (family) {
        case CodeFamily::t:
            if (n < 0) throw std::invalid_argument("t_n needs n >= 0");
            break;
        case CodeFamily::d: {
            if (n < 4 || n % 2 != 0) throw std::invalid_argument("d_n needs even n >= 4");
            // Weight-4 band shifting by two columns per row.
            for (int r = 0; r + 1 < n / 2; ++r) {
                BitWord w(n);
                for (int j = 0; j < 4; ++j) w = w.with_bit(2 * r + j, true);
                rows.push_back(w);
            }
            break;
        }
        case CodeFamily::e7:
            if (n != 7) throw std::invalid_argument("e_7 has length 7");
            rows = {BitWord::parse("1111000"), BitWord::parse("0011110"), BitWord::parse("1010101")};
            break;
        case CodeFamily::e8:
            if (n != 8) throw std::invalid_argument("e_8 has length 8");
            rows = {BitWord::parse("11110000"), BitWord::parse("00111100"),
                    BitWord::parse("00001111"), BitWord::parse("10101010")};
            break;
    }
    return rows;
}

LinearCode standard_code(CodeFamily family, int n) {
    return LinearCode::from_generators(n, standard_code_rows(family, n));
}

LinearCode direct_sum(const LinearCode& g, const LinearCode& h) {
    const int n = g.length() + h.length();
    if (n > 64) throw std::invalid_argument("direct sum exceeds supported length");
    std::vector<BitWord> rows;
    for (const auto& w : g.generators()) rows.push_back(BitWord(n, w.mask()));
    for (const auto& w : h.generators()) rows.push_back(BitWord(n, w.mask() << g.length()));
    return LinearCode::from_generators(n, rows);
}

namespace {

struct ColumnProfile {
    std::vector<int> col_weight;                 // per column: codewords with a 1 there
    std::vector<std::vector<int>> joint;         // per column pair: codewords with 1s in both
};

ColumnProfile profile_of(const std::vector<BitWord>& words, int n) {
    ColumnProfile p;
    p.col_weight.assign(n, 0);
    p.joint.assign(n, std::vector<int>(n, 0));
    for (const auto& w : words)
        for (int i = 0; i < n; ++i) {
            if (!w.bit(i)) continue;
            ++p.col_weight[i];
            for (int j = i + 1; j < n; ++j)
                if (w.bit(j)) ++p.joint[i][j], ++p.joint[j][i];
        }
    return p;
}

bool extend_permutation(int i, int n, std::vector<int>& sigma, std::vector<bool>& used,
                        const ColumnProfile& p1, const ColumnProfile& p2,
                        const std::vector<BitWord>& words1,
                        const std::unordered_set<BitWord>& set2) {
    if (i == n) {
        for (const auto& w : words1) {
            BitWord image(n);
            for (int c = 0; c < n; ++c)
                if (w.bit(c)) image = image.with_bit(sigma[c], true);
            if (!set2.count(image)) return false;
        }
        return true;
    }
    for (int target = 0; target < n; ++target) {
        if (used[target] || p1.col_weight[i] != p2.col_weight[target]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (p1.joint[i][j] != p2.joint[target][sigma[j]]) ok = false;
        if (!ok) continue;
        sigma[i] = target;
        used[target] = true;
        if (extend_permutation(i + 1, n, sigma, used, p1, p2, words1, set2)) return true;
        used[target] = false;
    }
    return false;
}

}  // namespace

bool permutation_equivalent(const LinearCode& c1, const LinearCode& c2, int budget_length) {
    if (c1.length() != c2.length()) throw std::invalid_argument("code length mismatch");
    const int n = c1.length();
    if (n > budget_length)
        throw BudgetError("permutation equivalence search limited to length " +
                          std::to_string(budget_length));
    if (c1.dimension() != c2.dimension()) return false;

    const auto words1 = c1.codewords();
    const auto words2 = c2.codewords();
    std::map<int, int> dist1, dist2;
    for (const auto& w : words1) ++dist1[w.weight()];
    for (const auto& w : words2) ++dist2[w.weight()];
    if (dist1 != dist2) return false;

    const auto p1 = profile_of(words1, n);
    const auto p2 = profile_of(words2, n);
    {
        auto s1 = p1.col_weight, s2 = p2.col_weight;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    std::unordered_set<BitWord> set2(words2.begin(), words2.end());
    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    return extend_permutation(0, n, sigma, used, p1, p2, words1, set2);
}

std::vector<LinearCode> enumerate_doubly_even(int n, int budget_length) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > budget_length)
        throw BudgetError("doubly even enumeration limited to length " +
                          std::to_string(budget_length));

    std::vector<BitWord> candidates;
    for (std::uint64_t m = 1; m < (1ull << n); ++m)
        if (std::popcount(m) % 4 == 0) candidates.push_back(BitWord(n, m));

    // Breadth-first extension: every doubly even code of dimension k+1
    // extends one of dimension k, so this visits every subspace once.
    auto key_of = [](const LinearCode& c) {
        std::string key;
        for (const auto& row : c.generators()) key += row.str() + "|";
        return key;
    };
    std::vector<LinearCode> all{LinearCode(n)};
    std::unordered_set<std::string> seen{key_of(all.front())};

    std::size_t frontier_begin = 0;
    while (frontier_begin < all.size()) {
        const std::size_t frontier_end = all.size();
        for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
            const LinearCode base = all[idx];
            for (const auto& w : candidates) {
                if (base.contains(w)) continue;
                bool compatible = true;
                for (const auto& g : base.generators())
                    if ((g & w).weight() % 2 != 0) {
                        compatible = false;
                        break;
                    }
                if (!compatible) continue;
                auto rows = base.generators();
                rows.push_back(w);
                LinearCode extended = LinearCode::from_generators(n, rows);
                if (seen.insert(key_of(extended)).second) all.push_back(extended);
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(all.begin(), all.end());
    return all;
}

MaxCodeResult max_doubly_even_exhaustive(int n, int budget_length) {
    MaxCodeResult best{0, LinearCode(n)};
    for (const auto& code : enumerate_doubly_even(n, budget_length))
        if (code.dimension() > best.dimension) best = {code.dimension(), code};
    return best;
}

namespace {

// Residue families for lengths 0..7 after peeling e_8 blocks, per the
// Bott-periodic table: t_1 t_2 t_3 d_4 d_4+t_1 d_6 e_7.
LinearCode residue_code(int n) {
    switch (n) {
        case 0: return LinearCode(0);
        case 1:
        case 2:
        case 3: return standard_code(CodeFamily::t, n);
        case 4: return standard_code(CodeFamily::d, 4);
        case 5: return direct_sum(standard_code(CodeFamily::d, 4), standard_code(CodeFamily::t, 1));
        case 6: return standard_code(CodeFamily::d, 6);
        case 7: return standard_code(CodeFamily::e7, 7);
        default: throw std::invalid_argument("residue length out of range");
    }
}

std::string residue_name(int n) {
    switch (n) {
        case 0: return "";
        case 1: return "t_1";
        case 2: return "t_2";
        case 3: return "t_3";
        case 4: return "d_4";
        case 5: return "d_4+t_1";
        case 6: return "d_6";
        case 7: return "e_7";
        default: throw std::invalid_argument("residue length out of range");
    }
}

}  // namespace

MaxCodeResult max_doubly_even_constructive(int n) {
    if (n < 0) throw std::invalid_argument("negative length");
    LinearCode code(0);
    for (int i = 0; i < n / 8; ++i) code = direct_sum(code, standard_code(CodeFamily::e8, 8));
    code = direct_sum(code, residue_code(n % 8));
    return {code.dimension(), code};
}

std::string constructive_code_name(int n) {
    std::string name;
    for (int i = 0; i < n / 8; ++i) name += (name.empty() ? "" : "+") + std::string("e_8");
    if (n % 8 > 0) name += (name.empty() ? "" : "+") + residue_name(n % 8);
    if (name.empty()) name = "t_0";
    return name;
}

}  // namespace cinkra
