#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cinkra {

enum class Parity : std::uint8_t { boson = 0, fermion = 1 };

struct GraphEdge {
    int color;
    int u, v;  // canonicalized to u <= v by edges()
    bool dashed;

    bool operator==(const GraphEdge&) const = default;
};

// Edge-colored dashed bipartite graph: n colors, a parity per vertex, and for
// every color a fixed-point-free involution on vertices carrying the dashes.
// The storage itself only guarantees that every vertex has exactly one edge
// per color and that a dash belongs to the edge (both endpoints agree);
// everything else (parities, quadrilaterals, odd dashing) is checked by
// validate(), which reports violations as data.
//
// Self-loops (partner(c,v) == v) are representable so that degenerate cube
// folds can be expressed; validate() flags them.
class Cliffordinkra {
  public:
    Cliffordinkra(int colors, std::vector<Parity> parity,
                  std::vector<std::vector<int>> partner,
                  std::vector<std::vector<std::uint8_t>> dashed);

    static Cliffordinkra from_edges(int colors, std::vector<Parity> parity,
                                    const std::vector<GraphEdge>& edges);

    int colors() const { return colors_; }
    int size() const { return static_cast<int>(parity_.size()); }
    Parity parity(int v) const { return parity_[static_cast<std::size_t>(v)]; }
    bool is_boson(int v) const { return parity(v) == Parity::boson; }
    int boson_count() const;

    int partner(int color, int v) const {
        return partner_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)];
    }
    bool dashed(int color, int v) const {
        return dashed_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)] != 0;
    }

    // Sorted by (color, u, v) with u <= v; one entry per edge.
    std::vector<GraphEdge> edges() const;
    int edge_count() const { return colors_ * size() / 2; }

    bool is_connected() const;

    bool operator==(const Cliffordinkra&) const = default;

  private:
    int colors_ = 0;
    std::vector<Parity> parity_;
    std::vector<std::vector<int>> partner_;
    std::vector<std::vector<std::uint8_t>> dashed_;
};

enum class Rule {
    edge_parity,      // an edge joins two vertices of the same parity (or a self-loop)
    quadrilateral,    // a bicolor component is not a 4-cycle
    totally_odd,      // a bicolor 4-cycle carries an even number of dashes
    mixed_even,       // Cl(p,q): a mixed-kind bicolor cycle carries an odd number of dashes
    code_split        // Cl(p,q): recovered codeword violates the mod-4 split-weight condition
};

std::string rule_name(Rule rule);

struct Violation {
    Rule rule;
    int color_a = -1;
    int color_b = -1;
    int vertex = -1;
    std::vector<int> cycle;      // vertices of the offending bicolor component
    std::string codeword;        // code_split witness

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the three defining rules plus the bipartite edge condition.
// Violations are data, not failures.
ValidationReport validate(const Cliffordinkra& g);

// Toggles the dash on every edge with exactly one endpoint in s.
Cliffordinkra vertex_switch(const Cliffordinkra& g, const std::vector<int>& s);

// Square matrix with exactly one nonzero entry, +1 or -1, per row and column.
// Column j maps to sign(j) * e_{target(j)}.
class SignedPermMatrix {
  public:
    SignedPermMatrix() = default;
    SignedPermMatrix(std::vector<int> target, std::vector<int> sign);

    static SignedPermMatrix identity(int dimension);
    // From a dense matrix of -1/0/+1 rows; throws if not a signed permutation.
    static SignedPermMatrix from_dense(const std::vector<std::vector<int>>& rows);

    int dimension() const { return static_cast<int>(target_.size()); }
    int target(int col) const { return target_[static_cast<std::size_t>(col)]; }
    int sign(int col) const { return sign_[static_cast<std::size_t>(col)]; }
    int entry(int row, int col) const { return target(col) == row ? sign(col) : 0; }

    SignedPermMatrix operator*(const SignedPermMatrix& other) const;  // this after other
    SignedPermMatrix negated() const;
    bool is_identity() const;
    bool is_symmetric() const;

    std::vector<std::vector<int>> dense() const;

    bool operator==(const SignedPermMatrix&) const = default;

  private:
    std::vector<int> target_;
    std::vector<int> sign_;
};

// Checks G_i G_j + G_j G_i = 2 eps_i delta_ij I with eps_i = -1 for the first
// p matrices and +1 for the rest, in exact integer arithmetic.
bool verify_clifford(const std::vector<SignedPermMatrix>& mats, int p, int q);

// One matrix per color with the edge/dash entries; requires a valid graph and
// an order listing all bosons before all fermions (vertex_order[i] = vertex
// placed at index i). The overload without an order uses bosons in increasing
// vertex number, then fermions.
std::vector<SignedPermMatrix> to_matrices(const Cliffordinkra& g,
                                          const std::vector<int>& vertex_order);
std::vector<SignedPermMatrix> to_matrices(const Cliffordinkra& g);

// Inverse direction: vertices are matrix indices, an edge of color c joins j
// and k when entry (j,k) of mats[c] is nonzero, dashed iff -1. Requires
// graded signed permutations satisfying the Cl(0,n) relations.
Cliffordinkra from_matrices(const std::vector<SignedPermMatrix>& mats,
                            const std::vector<Parity>& parity);

struct Isomorphism {
    std::vector<int> vertex_map;  // g1 vertex -> g2 vertex
    std::vector<int> switch_set;  // subset of g1 vertices, sorted
};

// Color- and parity-preserving graph isomorphism combined with a vertex
// switch making the dashings agree (colors are never permuted). Deterministic:
// anchors are scanned in increasing vertex order. Returns nullopt when the
// graphs are not equivalent.
std::optional<Isomorphism> is_isomorphic(const Cliffordinkra& g1, const Cliffordinkra& g2);

}  // namespace cinkra
