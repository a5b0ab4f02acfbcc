#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weylext {

/// (i,j,k)-degree triple. i and j are algebraic gradings, k is homological.
struct MultiDegree {
    int i = 0, j = 0, k = 0;
    friend MultiDegree operator+(MultiDegree a, MultiDegree b) {
        return {a.i + b.i, a.j + b.j, a.k + b.k};
    }
    friend bool operator==(MultiDegree a, MultiDegree b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend auto operator<=>(MultiDegree a, MultiDegree b) = default;
};

/// Sign (-1)^{ka*kb} governing commutation of two k-homogeneous elements.
inline int koszul_sign(int ka, int kb) { return ((ka * kb) & 1) ? -1 : +1; }

/// Sign of the iterated super tensor product:
/// (a1 x ... x an)(b1 x ... x bn) carries (-1)^{sum_{u>v} |a_u| |b_v|}.
int shuffle_sign(const std::vector<int>& left_kdegs, const std::vector<int>& right_kdegs);

/// Map (left vertex, right vertex, j, k) -> dimension. The comparison currency
/// between the combinatorial model and the dg homology computation.
class GradedDims {
public:
    struct Key {
        int s, t, j, k;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    void add(int s, int t, int j, int k, long n = 1);
    long at(int s, int t, int j, int k) const;
    long total() const;
    bool operator==(const GradedDims& o) const { return dims_ == o.dims_; }

    /// Human-readable description of the first differing entry, empty if equal.
    std::string first_mismatch(const GradedDims& other) const;

    const std::map<Key, long>& entries() const { return dims_; }

    /// Sum over the right vertex, yielding (s,j,k) -> dim. Used for identities
    /// about one-sided module structure.
    std::map<std::tuple<int, int, int>, long> left_dims() const;
    std::map<std::tuple<int, int, int>, long> right_dims() const;

    /// Dims of the dual: (s,t,j,k) -> (t,s,-j,-k).
    GradedDims dual() const;
    /// Dims shifted by <dj>[dk].
    GradedDims shifted(int dj, int dk) const;
    /// Pointwise sum.
    GradedDims plus(const GradedDims& o) const;

    std::string to_csv() const;

private:
    std::map<Key, long> dims_;
};

}  // namespace weylext
