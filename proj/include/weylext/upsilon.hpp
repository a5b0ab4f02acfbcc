#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylext/dgtensor.hpp"
#include "weylext/grading.hpp"

namespace weylext::model {

/// Resolutions of the conventions that are pinned empirically by calibration.
/// Each enum's first value is the calibrated one; the others are kept
/// implementable so the discrepancies stay demonstrable.
enum class XiCountReading { JPlusK, JMinusK };
enum class DegreeShiftRule { UPower, PaperLiteral };
enum class UnitRowConvention { Homological, Verbatim };
enum class ProductMatchRule { SumIJK, SumIJKA };

struct Conventions {
    dg::JunctionStyle junction = dg::JunctionStyle::SigmaAll;
    XiCountReading xi_count = XiCountReading::JPlusK;
    DegreeShiftRule shift = DegreeShiftRule::UPower;
    UnitRowConvention unit_row = UnitRowConvention::Homological;
    ProductMatchRule product = ProductMatchRule::SumIJK;
};

struct LatticePoint4 {
    int s, j, k, t;
};

/// Membership in the defining polytope of the quiver algebra:
/// 1 <= s <= t <= p, t - s = j + 2k, and the letter count 0 <= j+k <= 1
/// (the JMinusK reading keeps the printed inequality 0 <= j-k <= 1).
bool in_P_psi(int p, LatticePoint4 q, XiCountReading r = XiCountReading::JPlusK);
/// Sectors (s, p+1-s) for 1 <= s <= p at j = k = 0, minus (p,0,0,1).
bool in_P_0(int p, LatticePoint4 q);
/// 1 <= s,t <= p, j + 2k + 2 = t - 1 - s + p, 0 <= j + k + 2 <= 1.
bool in_P_M(int p, LatticePoint4 q);
/// As in_P_M minus the point (p,0,-1,1).
bool in_P_Mbar(int p, LatticePoint4 q);

enum class Family { Psi, Psi0, Mbar, M, Top };
std::string family_name(Family f);

/// A basis point (s, i, j, k, a, b, t): slots 2..4 are the ijk-degree of the
/// basis element, a and b count the two odd tensor-row markers.
struct LatticePoint7 {
    int s, i, j, k, a, b, t;
    friend auto operator<=>(const LatticePoint7&, const LatticePoint7&) = default;
    std::string str() const;
};

struct SignedPoint {
    int sign = 0;  // 0 encodes zero
    LatticePoint7 point{};
    bool is_zero() const { return sign == 0; }
};

/// The combinatorial model of the truncated homology algebra: lattice points
/// per tensor-degree row, degree formulas, and the signed monomial product.
class PolytopeModel {
public:
    PolytopeModel(int p, Conventions conv) : p_(p), conv_(conv) {}

    int p() const { return p_; }
    const Conventions& conventions() const { return conv_; }

    /// All basis points whose stored i-slot equals row.
    std::vector<LatticePoint7> row_points(int row) const;
    GradedDims row_dims(int row) const;

    /// Points in a rectangular window, duplicates impossible by construction
    /// (a collision in (s,i,j,k,t) is raised as a hard error).
    std::vector<LatticePoint7> enumerate_points(int i_min, int i_max) const;

    /// The unique basis point at (s,i,j,k,t), if any. Family and marker counts
    /// are recovered from the degree formulas.
    std::optional<LatticePoint7> find(int s, int i, int j, int k, int t) const;

    Family family_of(const LatticePoint7& w) const;
    /// Native polytope degrees (j0, k0) before the row shifts.
    std::pair<int, int> native_degrees(const LatticePoint7& w) const;

    bool is_unit(const LatticePoint7& w) const;
    LatticePoint7 unit(int s) const { return {s, 0, 0, 0, 0, 0, s}; }

    /// Signed monomial product. Zero when the inner vertices differ or the
    /// summed degree leaves the point set. The sign is
    /// (-1)^{(a+b) j0' + b a'} with (a,b) from the left factor and (j0', a')
    /// the native j-degree and marker count of the right factor.
    SignedPoint multiply(const LatticePoint7& w, const LatticePoint7& v) const;

    /// Whether a pairing is annihilated purely by the i-truncation.
    static bool truncated(const LatticePoint7& w, const LatticePoint7& v) {
        return w.i + v.i > 1;
    }

private:
    int p_;
    Conventions conv_;

    std::optional<LatticePoint7> find_in_family(Family fam, int d, int s, int i, int j,
                                                int k, int t) const;
    void degree_shift(Family fam, int a, int b, int& dj, int& dk) const;
};

struct ProductTableStats {
    long pairs = 0;
    long nonzero = 0;
    long truncated_pairs = 0;  // killed by the i <= 1 cutoff
};

struct ProductEntry {
    LatticePoint7 w, v;
    int sign;
    LatticePoint7 result;
};

/// All pairwise products inside the window; throws if a nonzero product is
/// not a single signed basis point.
ProductTableStats truncated_product_table(const PolytopeModel& m, int i_min, int i_max,
                                          std::vector<ProductEntry>* out = nullptr);

/// Compare the model's dims for a row against the dg oracle's homology.
/// Returns an empty string on success, otherwise a mismatch description.
std::string compare_model_oracle(const PolytopeModel& m, int i, FieldMode mode,
                                 int cap = 6);

}  // namespace weylext::model
