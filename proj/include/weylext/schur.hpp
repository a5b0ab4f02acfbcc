#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylext/upsilon.hpp"

namespace weylext::schur {

/// Basis monomial of the block algebra: a chain (w^1, ..., w^q, alpha) of
/// lattice points with i(w^1) = 0, i(w^{l+1}) = j(w^l) and alpha = j(w^q)
/// (these are the weight-zero conditions). The reported bidegree is the
/// componentwise sum of the factor degrees.
struct MuMonomial {
    std::vector<model::LatticePoint7> factors;
    int alpha = 0;

    std::vector<int> left_tuple() const;
    std::vector<int> right_tuple() const;
    int jdeg() const;
    int kdeg() const;
    std::vector<int> flat_key() const;  // canonical ordering key
    friend bool operator==(const MuMonomial&, const MuMonomial&) = default;
};

/// Weight vector (w^2_i - w^1_j, ..., alpha - w^q_j); zero iff the chain
/// condition holds.
std::vector<int> weight(const MuMonomial& m);

struct SignedChain {
    int sign = 0;  // 0 = zero
    MuMonomial chain;
    bool is_zero() const { return sign == 0; }
};

class BlockAlgebra {
public:
    BlockAlgebra(int p, int q, model::Conventions conv,
                 std::optional<long> k_max = std::nullopt);

    int p() const { return p_; }
    int q() const { return q_; }
    const model::PolytopeModel& mod() const { return mod_; }
    std::optional<long> k_max() const { return k_max_; }

    const std::vector<MuMonomial>& basis() const { return basis_; }
    long dim() const { return static_cast<long>(basis_.size()); }

    int index_of(const MuMonomial& m) const;  // -1 if absent
    bool is_idempotent(int idx) const;

    /// All vertex tuples, sorted; one idempotent chain per tuple.
    const std::vector<std::vector<int>>& vertices() const { return vertices_; }
    int idempotent_index(const std::vector<int>& tuple) const;

    /// Componentwise signed product with the iterated super sign over the
    /// factor k-degrees. Zero components kill the product. A nonzero product
    /// that leaves a k_max-truncated basis is reported as out-of-window.
    struct Product {
        enum class Status { Zero, Ok, OutOfWindow };
        Status status = Status::Zero;
        int sign = 0;
        int index = -1;
        MuMonomial chain;
    };
    Product multiply(const MuMonomial& a, const MuMonomial& b) const;
    Product multiply(int ia, int ib) const;

private:
    int p_, q_;
    model::PolytopeModel mod_;
    std::optional<long> k_max_;
    std::vector<MuMonomial> basis_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> vertices_;
    std::map<std::vector<int>, int> idempotents_;
};

/// Corner embedding into the next block: prepends the unit point at vertex 1.
MuMonomial embed(const MuMonomial& m);

}  // namespace weylext::schur
