#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "weylext/grading.hpp"
#include "weylext/matrix.hpp"
#include "weylext/scalar.hpp"

namespace weylext::psi {

/// Monomial x^a xi^b e_t of the quiver algebra on vertices 1..p, with
/// relations xi x = x xi and xi^2 = 0. Paths run from the right idempotent t
/// down to the left idempotent s = t - a - b. Degrees: x at (j,k) = (-1,1),
/// xi at (1,0).
struct PsiMonomial {
    int t = 1;  // right vertex
    int a = 0;  // number of x letters
    int b = 0;  // number of xi letters, 0 or 1

    int s() const { return t - a - b; }
    int j() const { return b - a; }
    int k() const { return a; }
    friend auto operator<=>(const PsiMonomial&, const PsiMonomial&) = default;
    std::string str() const;
};

bool valid(int p, const PsiMonomial& m);

/// Product f * g: paths compose when t(f) = s(g); the xi-count may not exceed 1.
std::optional<PsiMonomial> mul(int p, const PsiMonomial& f, const PsiMonomial& g);

/// Multiply by a single generator on the left or right; nullopt when zero.
std::optional<PsiMonomial> gen_mul(int p, const PsiMonomial& m, bool left, bool is_xi);

std::vector<PsiMonomial> basis(int p);
std::vector<PsiMonomial> with_left_vertex(int p, int s);

/// Graded dimensions of the regular bimodule: dim e_s Psi e_t is 1 for s = t,
/// 2 for s < t, 0 for s > t; total p^2.
GradedDims psi_graded_dims(int p);

enum class Side { Left, Right };
enum class Auto { Sigma, Tau };

/// Finite bimodule over the quiver algebra, given by a based action with
/// integer structure constants (always 0 or +-1 for the modules built here).
class Bimodule {
public:
    struct Elt {
        int s, t, j, k;
        std::string name;
    };
    enum Gen { LX = 0, LXI = 1, RX = 2, RXI = 3 };

    int p = 0;
    std::vector<Elt> basis;
    // act[g][i] = image of basis element i under generator g, as (coef, index)
    std::array<std::vector<std::vector<std::pair<int, int>>>, 4> act;

    GradedDims graded_dims() const;
    long dim() const { return static_cast<long>(basis.size()); }

    /// Exhaustive audit: generator images land in the right sector and degree,
    /// both relations hold on both sides, and the two actions commute.
    /// Sigma-twisted pieces carry no radical action on the twisted side, which
    /// the audit accounts for via the zero_radical flags.
    void check() const;

    std::array<bool, 2> zero_radical = {false, false};  // {left, right}
};

Bimodule regular(int p);
Bimodule psi0(int p);
Bimodule psi0_sigma(int p);      // sectors (h, p+1-h), h = 1..p
Bimodule psi0bar_sigma(int p);   // as above minus the (p, 1) sector

/// The 2p^2-dimensional bimodule on the transversal
/// { x.x^m (x) x^n.x, x.x^m (x) x^n.xi : 0 <= m, n <= p-1 }.
Bimodule build_M(int p);
/// M minus its (s,t,j,k) = (p,1,0,-1) basis element.
Bimodule build_Mbar(int p);

Bimodule dual(const Bimodule& b);
Bimodule twist(const Bimodule& b, Side side, Auto aut);

/// Graded dims of b1 (x)_Psi b2, computed as the quotient of the vertex-matched
/// pair space by the middle relations  u.r (x) v  -  u (x) r.v  for r in {x, xi}.
GradedDims tensor_over_psi(const Bimodule& b1, const Bimodule& b2, FieldMode mode,
                           std::uint64_t prime);

/// One-sided string module dims, used for dimension identities.
/// Left version: x.x^m at (p-m, -1-m, m), xi.x^m at (p-m, 1-m, m-1).
std::vector<std::tuple<int, int, int>> Ll_dims(int p);
/// Right version: x^l.x at (l+1, -1-l, l), x^l.xi at (l+1, 1-l, l-1).
std::vector<std::tuple<int, int, int>> Lr_dims(int p);

/// p = 2 only: the bimodule V_n built from symmetric powers in x and xi,
/// with sectors (e2 V e1, e1 V e1, e2 V e2, e1 V e2) of dims (n, n+1, n+1, n+2)
/// clipped at degree >= 0. Total dim 4(n+1) for n >= 1, and 4 for n = 0.
struct VBimodule {
    int n = 0;
    GradedDims dims;
    long total = 0;
};
VBimodule build_V(int p, int n);

}  // namespace weylext::psi
