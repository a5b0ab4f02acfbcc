#include "weylext/psi.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weylext::psi {

std::string PsiMonomial::str() const {
    std::ostringstream os;
    if (a == 0 && b == 0) {
        os << "e" << t;
        return os.str();
    }
    if (a == 1) os << "x";
    if (a > 1) os << "x^" << a;
    if (b) os << "xi";
    os << ".e" << t;
    return os.str();
}

bool valid(int p, const PsiMonomial& m) {
    return m.a >= 0 && (m.b == 0 || m.b == 1) && m.t >= 1 && m.t <= p && m.s() >= 1;
}

std::optional<PsiMonomial> mul(int p, const PsiMonomial& f, const PsiMonomial& g) {
    if (f.t != g.s()) return std::nullopt;
    PsiMonomial h{g.t, f.a + g.a, f.b + g.b};
    if (!valid(p, h)) return std::nullopt;
    return h;
}

std::optional<PsiMonomial> gen_mul(int p, const PsiMonomial& m, bool left, bool is_xi) {
    PsiMonomial r = m;
    if (left) {
        // prepend a letter at the left vertex; s drops, t fixed
        r.a += is_xi ? 0 : 1;
        r.b += is_xi ? 1 : 0;
    } else {
        r.a += is_xi ? 0 : 1;
        r.b += is_xi ? 1 : 0;
        r.t += 1;
    }
    if (!valid(p, r)) return std::nullopt;
    return r;
}

std::vector<PsiMonomial> basis(int p) {
    std::vector<PsiMonomial> out;
    for (int t = 1; t <= p; ++t)
        for (int b = 0; b <= 1; ++b)
            for (int a = 0; t - a - b >= 1; ++a) out.push_back({t, a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PsiMonomial> with_left_vertex(int p, int s) {
    std::vector<PsiMonomial> out;
    for (const auto& m : basis(p))
        if (m.s() == s) out.push_back(m);
    return out;
}

GradedDims psi_graded_dims(int p) {
    GradedDims d;
    for (const auto& m : basis(p)) d.add(m.s(), m.t, m.j(), m.k());
    return d;
}

GradedDims Bimodule::graded_dims() const {
    GradedDims d;
    for (const auto& e : basis) d.add(e.s, e.t, e.j, e.k);
    return d;
}

namespace {

// degree and sector move of each generator action
struct GenInfo {
    bool left;
    bool is_xi;
    int dj, dk;
};
constexpr GenInfo kGens[4] = {
    {true, false, -1, 1},   // LX
    {true, true, 1, 0},     // LXI
    {false, false, -1, 1},  // RX
    {false, true, 1, 0},    // RXI
};

std::vector<std::pair<int, int>> apply(const Bimodule& b, int g,
                                       const std::vector<std::pair<int, int>>& v) {
    std::map<int, int> acc;
    for (auto [c, i] : v)
        for (auto [c2, j] : b.act[g][i]) acc[j] += c * c2;
    std::vector<std::pair<int, int>> out;
    for (auto [i, c] : acc)
        if (c != 0) out.push_back({c, i});
    return out;
}

}  // namespace

void Bimodule::check() const {
    for (int g = 0; g < 4; ++g) {
        if (act[g].size() != basis.size())
            throw InvariantError("bimodule action table size mismatch");
        const GenInfo& gi = kGens[g];
        for (size_t i = 0; i < basis.size(); ++i) {
            for (auto [c, tgt] : act[g][i]) {
                const Elt& src = basis[i];
                const Elt& dst = basis[tgt];
                if (c == 0) throw InvariantError("zero structure constant stored");
                bool ok = dst.j == src.j + gi.dj && dst.k == src.k + gi.dk;
                if (gi.left)
                    ok = ok && dst.t == src.t && dst.s == src.s - 1;
                else
                    ok = ok && dst.s == src.s && dst.t == src.t + 1;
                // sigma-twisted sides move the opposite way; those pieces carry
                // no radical action, so nothing to check there
                if (!ok)
                    throw InvariantError("action of generator breaks degree/sector at " +
                                         src.name);
            }
        }
    }
    auto eq = [](const std::vector<std::pair<int, int>>& a,
                 const std::vector<std::pair<int, int>>& b) { return a == b; };
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<std::pair<int, int>> v{{1, static_cast<int>(i)}};
        // xi^2 = 0 and xi x = x xi on both sides
        if (!apply(*this, LXI, apply(*this, LXI, v)).empty())
            throw InvariantError("left xi^2 != 0 at " + basis[i].name);
        if (!apply(*this, RXI, apply(*this, RXI, v)).empty())
            throw InvariantError("right xi^2 != 0 at " + basis[i].name);
        if (!eq(apply(*this, LXI, apply(*this, LX, v)),
                apply(*this, LX, apply(*this, LXI, v))))
            throw InvariantError("left xi x != x xi at " + basis[i].name);
        if (!eq(apply(*this, RXI, apply(*this, RX, v)),
                apply(*this, RX, apply(*this, RXI, v))))
            throw InvariantError("right xi x != x xi at " + basis[i].name);
        // left and right actions commute
        for (int gl : {LX, LXI})
            for (int gr : {RX, RXI})
                if (!eq(apply(*this, gl, apply(*this, gr, v)),
                        apply(*this, gr, apply(*this, gl, v))))
                    throw InvariantError("left/right actions do not commute at " +
                                         basis[i].name);
    }
}

Bimodule regular(int p) {
    Bimodule b;
    b.p = p;
    auto mons = basis(p);
    std::map<PsiMonomial, int> index;
    for (const auto& m : mons) {
        index[m] = static_cast<int>(b.basis.size());
        b.basis.push_back({m.s(), m.t, m.j(), m.k(), m.str()});
    }
    for (int g = 0; g < 4; ++g) b.act[g].resize(mons.size());
    for (size_t i = 0; i < mons.size(); ++i)
        for (int g = 0; g < 4; ++g) {
            auto r = gen_mul(p, mons[i], kGens[g].left, kGens[g].is_xi);
            if (r) b.act[g][i].push_back({1, index[*r]});
        }
    return b;
}

namespace {

Bimodule semisimple(int p, const std::vector<std::pair<int, int>>& sectors,
                    const std::string& tag) {
    Bimodule b;
    b.p = p;
    b.zero_radical = {true, true};
    for (auto [s, t] : sectors) {
        std::ostringstream os;
        os << tag << "(" << s << "," << t << ")";
        b.basis.push_back({s, t, 0, 0, os.str()});
    }
    for (int g = 0; g < 4; ++g) b.act[g].resize(b.basis.size());
    return b;
}

}  // namespace

Bimodule psi0(int p) {
    std::vector<std::pair<int, int>> sec;
    for (int h = 1; h <= p; ++h) sec.push_back({h, h});
    return semisimple(p, sec, "e");
}

Bimodule psi0_sigma(int p) {
    std::vector<std::pair<int, int>> sec;
    for (int h = 1; h <= p; ++h) sec.push_back({h, p + 1 - h});
    return semisimple(p, sec, "z");
}

Bimodule psi0bar_sigma(int p) {
    std::vector<std::pair<int, int>> sec;
    for (int h = 1; h <= p - 1; ++h) sec.push_back({h, p + 1 - h});
    return semisimple(p, sec, "zbar");
}

namespace {

// Basis element (m, n, eps) of M: the class of x.x^m (x) x^n.x (eps = 0) or
// x.x^m (x) x^n.xi (eps = 1). The relations
//   xi.x^m (x) x^n.x  ==  x.x^m (x) x^n.xi,   xi.x^m (x) x^n.xi == 0
// are applied eagerly; they never appear in the stored tables.
struct MElt {
    int m, n, eps;
};

int m_index(int p, int m, int n, int eps) { return (m * p + n) * 2 + eps; }

Bimodule build_M_impl(int p, bool bar) {
    Bimodule b;
    b.p = p;
    std::vector<int> newindex(static_cast<size_t>(p) * p * 2, -1);
    for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n)
            for (int eps = 0; eps <= 1; ++eps) {
                if (bar && m == 0 && n == 0 && eps == 1) continue;  // the (p,1,0,-1) point
                int s = p - m, t = n + 1;
                int j = eps ? -m - n : -m - n - 2;
                int k = eps ? m + n - 1 : m + n;
                std::ostringstream os;
                os << "x.x^" << m << (eps ? "(x)x^" : "(x)x^") << n << (eps ? ".xi" : ".x");
                newindex[m_index(p, m, n, eps)] = static_cast<int>(b.basis.size());
                b.basis.push_back({s, t, j, k, os.str()});
            }
    for (int g = 0; g < 4; ++g) b.act[g].resize(b.basis.size());
    auto link = [&](int g, int m, int n, int eps, int m2, int n2, int eps2) {
        int i = newindex[m_index(p, m, n, eps)];
        int tgt = (m2 < p && n2 < p) ? newindex[m_index(p, m2, n2, eps2)] : -1;
        if (i >= 0 && tgt >= 0) b.act[g][i].push_back({1, tgt});
    };
    for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n) {
            // left x: x.(x.x^m (x) ...) = x.x^{m+1} (x) ...
            link(Bimodule::LX, m, n, 0, m + 1, n, 0);
            link(Bimodule::LX, m, n, 1, m + 1, n, 1);
            // left xi: lands in xi.x^{m+1} (x) ..., rewritten across the tensor
            link(Bimodule::LXI, m, n, 0, m + 1, n, 1);
            // right x
            link(Bimodule::RX, m, n, 0, m, n + 1, 0);
            link(Bimodule::RX, m, n, 1, m, n + 1, 1);
            // right xi
            link(Bimodule::RXI, m, n, 0, m, n + 1, 1);
        }
    return b;
}

}  // namespace

Bimodule build_M(int p) { return build_M_impl(p, false); }
Bimodule build_Mbar(int p) { return build_M_impl(p, true); }

Bimodule dual(const Bimodule& b) {
    Bimodule d;
    d.p = b.p;
    d.zero_radical = {b.zero_radical[1], b.zero_radical[0]};
    for (const auto& e : b.basis) d.basis.push_back({e.t, e.s, -e.j, -e.k, e.name + "*"});
    for (int g = 0; g < 4; ++g) d.act[g].resize(d.basis.size());
    // (g . f*)(v) = f*(v . g): transpose the opposite-side action
    constexpr int opp[4] = {Bimodule::RX, Bimodule::RXI, Bimodule::LX, Bimodule::LXI};
    for (int g = 0; g < 4; ++g)
        for (size_t src = 0; src < b.basis.size(); ++src)
            for (auto [c, tgt] : b.act[opp[g]][src])
                d.act[g][tgt].push_back({c, static_cast<int>(src)});
    return d;
}

Bimodule twist(const Bimodule& b, Side side, Auto aut) {
    Bimodule t = b;
    int lo = side == Side::Left ? 0 : 2;
    if (aut == Auto::Tau) {
        // negate the xi-action on the chosen side
        int g = lo + 1;
        for (auto& col : t.act[g])
            for (auto& [c, i] : col) c = -c;
        return t;
    }
    // Sigma relabels idempotent sectors s <-> p+1-s; only defined where the
    // radical acts as zero on that side.
    bool zr = side == Side::Left ? b.zero_radical[0] : b.zero_radical[1];
    if (!zr)
        throw InvariantError("sigma twist requires zero radical action on that side");
    for (auto& e : t.basis) {
        if (side == Side::Left)
            e.s = b.p + 1 - e.s;
        else
            e.t = b.p + 1 - e.t;
    }
    return t;
}

GradedDims tensor_over_psi(const Bimodule& b1, const Bimodule& b2, FieldMode mode,
                           std::uint64_t prime) {
    if (b1.p != b2.p) throw InvariantError("tensor_over_psi: different p");
    using Key = std::tuple<int, int, int, int>;  // (s, t, j, k)
    // vertex-matched pairs, grouped by sector and degree
    std::map<Key, std::vector<std::pair<int, int>>> pairs;
    std::map<std::pair<int, int>, int> pair_pos;  // (i1,i2) -> position in its group
    for (size_t i1 = 0; i1 < b1.basis.size(); ++i1)
        for (size_t i2 = 0; i2 < b2.basis.size(); ++i2) {
            const auto& u = b1.basis[i1];
            const auto& v = b2.basis[i2];
            if (u.t != v.s) continue;
            Key key{u.s, v.t, u.j + v.j, u.k + v.k};
            pair_pos[{static_cast<int>(i1), static_cast<int>(i2)}] =
                static_cast<int>(pairs[key].size());
            pairs[key].push_back({static_cast<int>(i1), static_cast<int>(i2)});
        }
    // relations u.r (x) v - u (x) r.v, for u with t(u) + 1 = s(v)
    std::map<Key, std::vector<std::map<int, int>>> rels;
    for (size_t i1 = 0; i1 < b1.basis.size(); ++i1)
        for (size_t i2 = 0; i2 < b2.basis.size(); ++i2) {
            const auto& u = b1.basis[i1];
            const auto& v = b2.basis[i2];
            if (u.t + 1 != v.s) continue;
            for (int r = 0; r <= 1; ++r) {  // 0 = x, 1 = xi
                int dj = r ? 1 : -1, dk = r ? 0 : 1;
                Key key{u.s, v.t, u.j + v.j + dj, u.k + v.k + dk};
                std::map<int, int> vec;
                int gr = r ? Bimodule::RXI : Bimodule::RX;
                for (auto [c, tgt] : b1.act[gr][i1]) {
                    auto it = pair_pos.find({tgt, static_cast<int>(i2)});
                    if (it == pair_pos.end())
                        throw InvariantError("tensor_over_psi: pair bookkeeping");
                    vec[it->second] += c;
                }
                int gl = r ? Bimodule::LXI : Bimodule::LX;
                for (auto [c, tgt] : b2.act[gl][i2]) {
                    auto it = pair_pos.find({static_cast<int>(i1), tgt});
                    if (it == pair_pos.end())
                        throw InvariantError("tensor_over_psi: pair bookkeeping");
                    vec[it->second] -= c;
                }
                if (!vec.empty()) rels[key].push_back(std::move(vec));
            }
        }
    GradedDims out;
    for (auto& [key, group] : pairs) {
        int n = static_cast<int>(group.size());
        int r = 0;
        auto it = rels.find(key);
        if (it != rels.end()) {
            IntMat m(static_cast<int>(it->second.size()), n);
            for (size_t row = 0; row < it->second.size(); ++row)
                for (auto [col, c] : it->second[row]) m.at(static_cast<int>(row), col) = c;
            r = rank_int(m, mode, prime);
        }
        if (n - r > 0)
            out.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key),
                    n - r);
    }
    return out;
}

std::vector<std::tuple<int, int, int>> Ll_dims(int p) {
    std::vector<std::tuple<int, int, int>> out;
    for (int m = 0; m < p; ++m) {
        out.push_back({p - m, -1 - m, m});      // x.x^m
        out.push_back({p - m, 1 - m, m - 1});   // xi.x^m
    }
    return out;
}

std::vector<std::tuple<int, int, int>> Lr_dims(int p) {
    std::vector<std::tuple<int, int, int>> out;
    for (int l = 0; l < p; ++l) {
        out.push_back({l + 1, -1 - l, l});      // x^l.x
        out.push_back({l + 1, 1 - l, l - 1});   // x^l.xi
    }
    return out;
}

VBimodule build_V(int p, int n) {
    if (p != 2) throw InvariantError("build_V is defined only for p = 2");
    if (n < 0) throw InvariantError("build_V: n must be >= 0");
    VBimodule v;
    v.n = n;
    // sectors (h, s, t): degree-h part clipped at h >= 0, with a global j-shift
    // by -n matching the homology normalisation
    struct Sec {
        int h, s, t;
    };
    Sec secs[4] = {{n - 1, 2, 1}, {n, 1, 1}, {n, 2, 2}, {n + 1, 1, 2}};
    for (auto [h, s, t] : secs) {
        if (h < 0) continue;
        for (int d = 0; d <= h; ++d) {
            v.dims.add(s, t, h - 2 * d - n, d);
            ++v.total;
        }
    }
    return v;
}

}  // namespace weylext::psi
