#include "weylext/upsilon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylext::model {

std::string family_name(Family f) {
    switch (f) {
        case Family::Psi: return "psi";
        case Family::Psi0: return "psi0";
        case Family::Mbar: return "mbar";
        case Family::M: return "m";
        case Family::Top: return "top";
    }
    return "?";
}

std::string LatticePoint7::str() const {
    std::ostringstream os;
    os << "(" << s << "," << i << "," << j << "," << k << "," << a << "," << b << "," << t
       << ")";
    return os.str();
}

bool in_P_psi(int p, LatticePoint4 q, XiCountReading r) {
    if (!(1 <= q.s && q.s <= q.t && q.t <= p)) return false;
    if (q.t - q.s != q.j + 2 * q.k) return false;
    if (q.k < 0) return false;  // the letter count of the second generator
    int c = r == XiCountReading::JPlusK ? q.j + q.k : q.j - q.k;
    return 0 <= c && c <= 1;
}

bool in_P_0(int p, LatticePoint4 q) {
    if (q.j != 0 || q.k != 0) return false;
    if (q.s < 1 || q.s > p || q.t < 1 || q.t > p) return false;
    if (q.t + q.s != p + 1) return false;
    return !(q.s == p && q.t == 1);
}

bool in_P_M(int p, LatticePoint4 q) {
    if (q.s < 1 || q.s > p || q.t < 1 || q.t > p) return false;
    if (q.j + 2 * q.k + 2 != q.t - 1 - q.s + p) return false;
    int c = q.j + q.k + 2;
    return 0 <= c && c <= 1;
}

bool in_P_Mbar(int p, LatticePoint4 q) {
    if (q.s == p && q.j == 0 && q.k == -1 && q.t == 1) return false;
    return in_P_M(p, q);
}

void PolytopeModel::degree_shift(Family fam, int a, int b, int& dj, int& dk) const {
    switch (fam) {
        case Family::Psi:
            dj = 0, dk = 0;
            return;
        case Family::Psi0:
            dj = 1, dk = 0;
            return;
        case Family::Top:
            dj = 1, dk = 0;
            return;
        case Family::Mbar:
        case Family::M: {
            int e = conv_.shift == DegreeShiftRule::UPower ? a - b : a;
            dj = (1 - e) * p_ + 1;
            dk = (e - 1) * (p_ - 1);
            if (conv_.shift == DegreeShiftRule::PaperLiteral) {
                // keep the printed sign on the j-shift
                dj = (e - 1) * p_ + 1;
            }
            return;
        }
    }
}

std::vector<LatticePoint7> PolytopeModel::row_points(int row) const {
    std::vector<LatticePoint7> out;
    auto add_family = [&](Family fam, int a, int b) {
        int dj, dk;
        degree_shift(fam, a, b, dj, dk);
        int i = -a - b;
        for (int s = 1; s <= p_; ++s)
            for (int t = 1; t <= p_; ++t)
                for (int k0 = -1; k0 <= 2 * p_; ++k0) {
                    // j0 is determined by the sector equality of each polytope
                    std::vector<int> j0s;
                    if (fam == Family::Psi)
                        j0s.push_back(t - s - 2 * k0);
                    else if (fam == Family::Psi0)
                        j0s.push_back(0);
                    else
                        j0s.push_back(t - 1 - s + p_ - 2 - 2 * k0);
                    for (int j0 : j0s) {
                        LatticePoint4 q{s, j0, k0, t};
                        bool in = false;
                        switch (fam) {
                            case Family::Psi: in = in_P_psi(p_, q, conv_.xi_count); break;
                            case Family::Psi0: in = in_P_0(p_, q); break;
                            case Family::Mbar: in = in_P_Mbar(p_, q); break;
                            case Family::M: in = in_P_M(p_, q); break;
                            case Family::Top: break;
                        }
                        if (in) out.push_back({s, i, j0 + dj, k0 + dk, a, b, t});
                    }
                }
    };

    int top_row = conv_.unit_row == UnitRowConvention::Homological ? 1 : -1;
    if (row == top_row) {
        for (int s = 1; s <= p_; ++s) {
            if (conv_.unit_row == UnitRowConvention::Homological)
                out.push_back({s, 1, 1, 0, -1, 0, p_ + 1 - s});
            else
                out.push_back({s, -1, 1, -1, 0, 0, p_ + 1 - s});
        }
    }
    if (row == 0) add_family(Family::Psi, 0, 0);
    if (row <= -1) {
        if (row % 2 == 0) {
            add_family(Family::Psi, -row / 2, -row / 2);
        } else {
            int e = (-row - 1) / 2;
            add_family(Family::Mbar, e + 1, e);
            add_family(Family::Psi0, e, e + 1);
        }
        for (int d = 2; d <= -row; ++d) {
            if ((d + row) % 2 != 0) continue;
            int e = (-row - d) / 2;
            add_family(Family::M, d + e, e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

GradedDims PolytopeModel::row_dims(int row) const {
    GradedDims d;
    for (const auto& w : row_points(row)) d.add(w.s, w.t, w.j, w.k);
    return d;
}

std::vector<LatticePoint7> PolytopeModel::enumerate_points(int i_min, int i_max) const {
    std::vector<LatticePoint7> out;
    std::map<std::tuple<int, int, int, int, int>, LatticePoint7> seen;
    for (int row = i_max; row >= i_min; --row)
        for (const auto& w : row_points(row)) {
            auto key = std::make_tuple(w.s, w.i, w.j, w.k, w.t);
            auto [it, fresh] = seen.insert({key, w});
            if (!fresh)
                throw InvariantError("duplicate basis point at (s,i,j,k,t): " + w.str() +
                                     " vs " + it->second.str());
            out.push_back(w);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Family PolytopeModel::family_of(const LatticePoint7& w) const {
    if (conv_.unit_row == UnitRowConvention::Homological) {
        if (w.a == -1) return Family::Top;
    } else {
        if (w.i == -1 && w.k == w.j - 2) return Family::Top;  // stored (1,-1)
    }
    int d = w.a - w.b;
    if (d == 0) return Family::Psi;
    if (d == -1) return Family::Psi0;
    if (d == 1) return Family::Mbar;
    return Family::M;
}

std::pair<int, int> PolytopeModel::native_degrees(const LatticePoint7& w) const {
    Family fam = family_of(w);
    if (fam == Family::Top) return {0, 0};
    int dj, dk;
    degree_shift(fam, w.a, w.b, dj, dk);
    return {w.j - dj, w.k - dk};
}

bool PolytopeModel::is_unit(const LatticePoint7& w) const {
    return w.i == 0 && w.j == 0 && w.k == 0 && w.a == 0 && w.b == 0 && w.s == w.t;
}

std::optional<LatticePoint7> PolytopeModel::find_in_family(Family fam, int d, int s, int i,
                                                           int j, int k, int t) const {
    int b = 0, a = 0;
    switch (fam) {
        case Family::Top: {
            bool stored_pos = conv_.unit_row == UnitRowConvention::Homological;
            if (stored_pos) {
                if (i != 1 || j != 1 || k != 0) return std::nullopt;
                if (t != p_ + 1 - s) return std::nullopt;
                return LatticePoint7{s, 1, 1, 0, -1, 0, t};
            }
            if (i != -1 || j != 1 || k != -1) return std::nullopt;
            if (t != p_ + 1 - s) return std::nullopt;
            return LatticePoint7{s, -1, 1, -1, 0, 0, t};
        }
        case Family::Psi:
            if (i > 0 || i % 2 != 0) return std::nullopt;
            a = b = -i / 2;
            break;
        case Family::Psi0:
            if (i > -1 || (-i) % 2 != 1) return std::nullopt;
            b = (1 - i) / 2;
            a = b - 1;
            break;
        case Family::Mbar:
            if (i > -1 || (-i) % 2 != 1) return std::nullopt;
            a = (1 - i) / 2;
            b = a - 1;
            break;
        case Family::M: {
            if (d < 2 || d > -i || (d + i) % 2 != 0) return std::nullopt;
            int e = (-i - d) / 2;
            a = d + e;
            b = e;
            break;
        }
    }
    LatticePoint7 cand{s, i, j, k, a, b, t};
    auto [j0, k0] = native_degrees(cand);
    LatticePoint4 q{s, j0, k0, t};
    bool in = false;
    switch (fam) {
        case Family::Psi: in = in_P_psi(p_, q, conv_.xi_count); break;
        case Family::Psi0: in = in_P_0(p_, q); break;
        case Family::Mbar: in = in_P_Mbar(p_, q); break;
        case Family::M: in = in_P_M(p_, q); break;
        case Family::Top: in = true; break;
    }
    if (!in) return std::nullopt;
    return cand;
}

std::optional<LatticePoint7> PolytopeModel::find(int s, int i, int j, int k, int t) const {
    std::optional<LatticePoint7> found;
    auto consider = [&](std::optional<LatticePoint7> c) {
        if (!c) return;
        if (found && *found != *c)
            throw InvariantError("basis point not unique at (s,i,j,k,t): " + found->str() +
                                 " vs " + c->str());
        found = c;
    };
    consider(find_in_family(Family::Top, 0, s, i, j, k, t));
    consider(find_in_family(Family::Psi, 0, s, i, j, k, t));
    consider(find_in_family(Family::Psi0, -1, s, i, j, k, t));
    consider(find_in_family(Family::Mbar, 1, s, i, j, k, t));
    // the marker count of an M-row point follows from its letter count
    for (int d = 2; d <= -i; ++d) consider(find_in_family(Family::M, d, s, i, j, k, t));
    return found;
}

SignedPoint PolytopeModel::multiply(const LatticePoint7& w, const LatticePoint7& v) const {
    if (w.t != v.s) return {};
    int i = w.i + v.i, j = w.j + v.j, k = w.k + v.k;
    if (i > 1) return {};
    auto target = find(w.s, i, j, k, v.t);
    if (!target) return {};
    if (conv_.product == ProductMatchRule::SumIJKA && target->a != w.a + v.a) return {};
    auto [j0p, k0p] = native_degrees(v);
    (void)k0p;
    long e = static_cast<long>(w.a + w.b) * j0p + static_cast<long>(w.b) * v.a;
    if (target->a != w.a + v.a) {
        // marker-crossing product through the nonsplit row extension; the
        // symmetric correction makes the signed product associative
        auto [j0w, k0w] = native_degrees(w);
        (void)k0w;
        e += static_cast<long>(w.a) * j0p + static_cast<long>(j0w) * v.a;
    }
    return {(e % 2 + 2) % 2 == 1 ? -1 : 1, *target};
}

ProductTableStats truncated_product_table(const PolytopeModel& m, int i_min, int i_max,
                                          std::vector<ProductEntry>* out) {
    auto pts = m.enumerate_points(i_min, i_max);
    ProductTableStats st;
    for (const auto& w : pts)
        for (const auto& v : pts) {
            ++st.pairs;
            if (PolytopeModel::truncated(w, v)) {
                ++st.truncated_pairs;
                continue;
            }
            SignedPoint r = m.multiply(w, v);
            if (!r.is_zero()) {
                ++st.nonzero;
                if (out) out->push_back({w, v, r.sign, r.point});
            }
        }
    return st;
}

std::string compare_model_oracle(const PolytopeModel& m, int i, FieldMode mode, int cap) {
    dg::DgChain chain = dg::DgChain::build(m.p(), i, m.conventions().junction, cap);
    if (chain.junction_broken) return "oracle chain ill-formed: " + chain.junction_note;
    GradedDims oracle = chain.homology(mode, static_cast<std::uint64_t>(m.p()));
    GradedDims model = m.row_dims(i);
    if (model == oracle) return {};
    std::ostringstream os;
    os << "model/oracle mismatch at i=" << i << " (model vs oracle): "
       << model.first_mismatch(oracle);
    return os.str();
}

}  // namespace weylext::model
