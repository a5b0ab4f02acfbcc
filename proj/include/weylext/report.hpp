#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylext/schur.hpp"

namespace weylext::report {

using Vertex = std::vector<int>;  // vertex tuple (s_1, ..., s_q)

std::string vertex_str(const Vertex& v);

/// Per ordered vertex pair (factor vertex, column vertex): (j,k) -> count.
/// The column of m lists the composition factors of the projective at m.
class CartanTable {
public:
    using DegMap = std::map<std::pair<int, int>, long>;

    void add(const Vertex& factor, const Vertex& column, int j, int k, long n = 1);
    const DegMap* entry(const Vertex& factor, const Vertex& column) const;
    long column_total(const Vertex& column) const;
    long total() const;

    const std::map<std::pair<Vertex, Vertex>, DegMap>& entries() const { return map_; }

    std::string to_csv() const;
    std::string to_json() const;

private:
    std::map<std::pair<Vertex, Vertex>, DegMap> map_;
};

CartanTable cartan(const schur::BlockAlgebra& b);

/// dim Ext^k(Delta(from), Delta(to)) read off the Cartan data: the basis
/// elements in the column of `from` with factor vertex `to`.
long ext_dim(const CartanTable& c, const Vertex& from, const Vertex& to, int k,
             std::optional<int> j = std::nullopt);

struct QuiverGraph {
    struct Arrow {
        Vertex source, target;  // source = column, target = factor vertex
        int j, k;
        friend auto operator<=>(const Arrow&, const Arrow&) = default;
    };
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;  // sorted, one entry per arrow (with multiplicity)

    std::string to_dot() const;
};

/// Arrows of the basic algebra: radical modulo radical squared. The radical is
/// the span of the non-idempotent basis chains; an audit verifies it is
/// nilpotent and supports no loops in degree (0,0).
QuiverGraph quiver(const schur::BlockAlgebra& b);

/// Golden reference data: composition-factor multisets per column plus the
/// arrow list, over abstract integer vertex labels.
struct ReferenceBlock {
    int nvertices = 0;
    // (column, factor) -> (j,k) -> multiplicity
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, long>> cartan;
    std::vector<std::tuple<int, int, int, int>> arrows;  // (source, target, j, k)

    long column_total(int column) const;
};

ReferenceBlock load_reference_csv(const std::string& path);
/// Restriction to a label subset, relabelled 1..n in the given order
/// (used to derive the q=1 reference from the corner of the q=2 data).
ReferenceBlock restrict_reference(const ReferenceBlock& ref, const std::vector<int>& keep);

struct MatchResult {
    bool ok = false;
    int solutions = 0;
    std::map<int, Vertex> bijection;  // reference label -> vertex tuple
    std::string diff;                 // first discrepancy when not ok
};

/// Search for vertex bijections matching both the Cartan data and the quiver;
/// succeeds iff exactly one exists.
MatchResult match_reference(const schur::BlockAlgebra& b, const ReferenceBlock& ref);

/// Generating function of a Cartan entry: map (j,k) -> coefficient, printed
/// as a Laurent polynomial in x (j-grading) and y (k-grading).
std::map<std::pair<int, int>, long> poincare(const CartanTable& c, const Vertex& u,
                                             const Vertex& v);
std::string poincare_str(const std::map<std::pair<int, int>, long>& poly);

/// Serialisation of a block algebra: vertices, basis chains and degrees.
std::string block_to_json(const schur::BlockAlgebra& b, bool with_products = false);

std::string default_reference_path(int p, int q);

}  // namespace weylext::report
