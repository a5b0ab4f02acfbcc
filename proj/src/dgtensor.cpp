#include "weylext/dgtensor.hpp"

#include <algorithm>
#include <sstream>

#include "weylext/matrix.hpp"

namespace weylext::dg {

using psi::PsiMonomial;

std::string junction_style_name(JunctionStyle s) {
    switch (s) {
        case JunctionStyle::SigmaAll: return "sigma_all";
        case JunctionStyle::Plain: return "plain";
        case JunctionStyle::SigmaFirst: return "sigma_first";
        case JunctionStyle::SigmaAlternating: return "sigma_alternating";
    }
    return "?";
}

std::optional<JunctionStyle> junction_style_from_name(const std::string& name) {
    if (name == "sigma_all") return JunctionStyle::SigmaAll;
    if (name == "plain") return JunctionStyle::Plain;
    if (name == "sigma_first") return JunctionStyle::SigmaFirst;
    if (name == "sigma_alternating") return JunctionStyle::SigmaAlternating;
    return std::nullopt;
}

namespace {

// left vertex required of factor m+1, given factor m ends at vertex t
int junction_next_s(JunctionStyle style, int p, int m, int t) {
    switch (style) {
        case JunctionStyle::SigmaAll: return p + 1 - t;
        case JunctionStyle::Plain: return t;
        case JunctionStyle::SigmaFirst: return m == 1 ? p + 1 - t : t;
        case JunctionStyle::SigmaAlternating: return (m % 2 == 1) ? p + 1 - t : t;
    }
    return 0;
}

}  // namespace

int DgChain::index_of(const std::vector<PsiMonomial>& factors) const {
    auto it = index_.find(factors);
    return it == index_.end() ? -1 : it->second;
}

DgChain DgChain::build(int p, int i, JunctionStyle style, int cap) {
    if (i > 1) throw InvariantError("tensor degree must be <= 1");
    if (-i > cap) throw InvariantError("tensor degree cap exceeded: |i| > " +
                                       std::to_string(cap));
    DgChain c;
    c.p = p;
    c.i = i;
    c.style = style;

    auto push = [&](std::vector<PsiMonomial> f) {
        Word w;
        int js = 0, ks = 0;
        for (size_t m = 0; m < f.size(); ++m) {
            int sign = (i == 1 && m == 1) ? -1 : 1;  // dual factor contributes negatively
            js += sign * f[m].j();
            ks += sign * f[m].k();
        }
        w.s = f.front().s();
        w.t = (i == 1) ? f.back().s() : f.back().t;
        w.j = js + i;
        w.k = ks;
        w.factors = std::move(f);
        c.index_[w.factors] = static_cast<int>(c.words.size());
        c.words.push_back(std::move(w));
    };

    auto mons = psi::basis(p);
    if (i == 0) {
        for (const auto& m : mons) push({m});
    } else if (i == 1) {
        for (const auto& f : mons)
            for (const auto& g : mons)
                if (g.t == p + 1 - f.t) push({f, g});
    } else {
        int n = 1 - i;
        std::vector<PsiMonomial> cur;
        auto rec = [&](auto&& self, int m) -> void {
            if (m == n) {
                push(cur);
                return;
            }
            int s_need = junction_next_s(style, p, m, cur.back().t);
            if (s_need < 1 || s_need > p) return;
            for (const auto& g : psi::with_left_vertex(p, s_need)) {
                cur.push_back(g);
                self(self, m + 1);
                cur.pop_back();
            }
        };
        for (const auto& f : mons) {
            cur.assign(1, f);
            rec(rec, 1);
        }
    }

    // differential
    c.diff.resize(c.words.size());
    if (i == 0) return c;
    for (size_t wi = 0; wi < c.words.size(); ++wi) {
        const Word& w = c.words[wi];
        int n = static_cast<int>(w.factors.size());
        int ksum = 0;
        std::map<int, int> acc;
        for (int m = 0; m + 1 < n; ++m) {
            ksum += w.factors[m].k();
            int sign = (ksum & 1) ? -1 : 1;
            for (int which = 0; which < 2; ++which) {
                // which = 0:  f_m x (x) xi f_{m+1};  which = 1:  f_m xi (x) x f_{m+1}
                std::optional<PsiMonomial> lf =
                    psi::gen_mul(p, w.factors[m], /*left=*/false, /*is_xi=*/which == 1);
                std::optional<PsiMonomial> rf;
                if (i == 1 && m + 1 == n - 1) {
                    // dual factor: left multiplication removes a letter of g
                    PsiMonomial g = w.factors[m + 1];
                    if (which == 0) {  // xi . g*
                        if (g.b == 1) rf = PsiMonomial{g.t - 1, g.a, 0};
                    } else {  // x . g*
                        if (g.a >= 1) rf = PsiMonomial{g.t - 1, g.a - 1, g.b};
                    }
                    if (rf && !psi::valid(p, *rf)) rf = std::nullopt;
                } else {
                    rf = psi::gen_mul(p, w.factors[m + 1], /*left=*/true,
                                      /*is_xi=*/which == 0);
                }
                if (!lf || !rf) continue;
                std::vector<PsiMonomial> nf = w.factors;
                nf[m] = *lf;
                nf[m + 1] = *rf;
                int tgt = c.index_of(nf);
                if (tgt < 0) {
                    c.junction_broken = true;
                    if (c.junction_note.empty()) {
                        std::ostringstream os;
                        os << "differential leaves the word set at word " << wi
                           << " junction " << m;
                        c.junction_note = os.str();
                    }
                    continue;
                }
                const Word& wt = c.words[tgt];
                if (wt.s != w.s || wt.t != w.t || wt.j != w.j || wt.k != w.k + 1)
                    throw InvariantError("differential term has wrong degree");
                acc[tgt] += sign;
            }
        }
        for (auto [tgt, coef] : acc)
            if (coef != 0) c.diff[wi].push_back({coef, tgt});
    }
    return c;
}

void DgChain::verify_d_squared() const {
    if (junction_broken)
        throw InvariantError("junction convention unsatisfiable: " + junction_note);
    for (size_t wi = 0; wi < words.size(); ++wi) {
        std::map<int, long> acc;
        for (auto [c1, mid] : diff[wi])
            for (auto [c2, tgt] : diff[mid]) acc[tgt] += static_cast<long>(c1) * c2;
        for (auto [tgt, coef] : acc)
            if (coef != 0)
                throw InvariantError("not a complex: d(d(word " + std::to_string(wi) +
                                     ")) has component " + std::to_string(coef) +
                                     " at word " + std::to_string(tgt));
    }
}

GradedDims DgChain::homology(FieldMode mode, std::uint64_t prime) const {
    if (junction_broken)
        throw InvariantError("junction convention unsatisfiable: " + junction_note);
    verify_d_squared();
    using SKey = std::tuple<int, int, int>;  // (s, t, j)
    std::map<SKey, std::map<int, std::vector<int>>> sectors;
    for (size_t wi = 0; wi < words.size(); ++wi)
        sectors[{words[wi].s, words[wi].t, words[wi].j}][words[wi].k].push_back(
            static_cast<int>(wi));

    GradedDims out;
    for (auto& [sk, by_k] : sectors) {
        std::map<int, int> rank_at;  // k -> rank of d : k -> k+1
        for (auto& [k, col_words] : by_k) {
            auto it_next = by_k.find(k + 1);
            if (it_next == by_k.end()) {
                rank_at[k] = 0;
                continue;
            }
            std::map<int, int> row_of;
            for (size_t r = 0; r < it_next->second.size(); ++r)
                row_of[it_next->second[r]] = static_cast<int>(r);
            IntMat m(static_cast<int>(it_next->second.size()),
                     static_cast<int>(col_words.size()));
            for (size_t cidx = 0; cidx < col_words.size(); ++cidx)
                for (auto [coef, tgt] : diff[col_words[cidx]]) {
                    auto rit = row_of.find(tgt);
                    if (rit == row_of.end())
                        throw InvariantError("differential crosses sectors");
                    m.at(rit->second, static_cast<int>(cidx)) = coef;
                }
            rank_at[k] = rank_int(m, mode, prime);
        }
        for (auto& [k, col_words] : by_k) {
            int r_out = rank_at.count(k) ? rank_at[k] : 0;
            int r_in = rank_at.count(k - 1) ? rank_at[k - 1] : 0;
            int h = static_cast<int>(col_words.size()) - r_out - r_in;
            if (h < 0) throw InvariantError("negative homology dimension");
            if (h > 0) out.add(std::get<0>(sk), std::get<1>(sk), std::get<2>(sk), k, h);
        }
    }
    return out;
}

Element DgChain::apply_d(const Element& e) const {
    Element out;
    for (auto [wi, c] : e.coef)
        for (auto [c2, tgt] : diff[wi]) {
            int& v = out.coef[tgt];
            v += c * c2;
            if (v == 0) out.coef.erase(tgt);
        }
    return out;
}

DgChain::CycleStatus DgChain::verify_cycle(const Element& e, FieldMode mode,
                                           std::uint64_t prime) const {
    for (auto [wi, c] : e.coef)
        if (wi < 0 || wi >= static_cast<int>(words.size()))
            throw InvariantError("verify_cycle: unknown word index");
    CycleStatus st{apply_d(e).empty(), false};

    // boundary test sector by sector; d preserves (s,t,j)
    using SKey = std::tuple<int, int, int, int>;  // (s, t, j, k)
    std::map<SKey, std::map<int, int>> parts;
    for (auto [wi, c] : e.coef) {
        const Word& w = words[wi];
        parts[{w.s, w.t, w.j, w.k}][wi] = c;
    }
    bool boundary = true;
    for (auto& [sk, comp] : parts) {
        auto [ss, st_, sj, skk] = sk;
        // candidate preimages: all words in the sector at k-1
        std::vector<int> srcs, tgts;
        for (size_t wi = 0; wi < words.size(); ++wi) {
            const Word& w = words[wi];
            if (w.s == ss && w.t == st_ && w.j == sj) {
                if (w.k == skk - 1) srcs.push_back(static_cast<int>(wi));
                if (w.k == skk) tgts.push_back(static_cast<int>(wi));
            }
        }
        std::map<int, int> row_of;
        for (size_t r = 0; r < tgts.size(); ++r) row_of[tgts[r]] = static_cast<int>(r);
        IntMat m(static_cast<int>(tgts.size()), static_cast<int>(srcs.size()));
        for (size_t cidx = 0; cidx < srcs.size(); ++cidx)
            for (auto [coef, tgt] : diff[srcs[cidx]]) m.at(row_of.at(tgt), static_cast<int>(cidx)) = coef;
        std::vector<long long> b(tgts.size(), 0);
        for (auto [wi, c] : comp) b[row_of.at(wi)] = c;

        auto solvable_over = [&](auto field) {
            auto fm = lift(field, m);
            std::vector<typename decltype(field)::Elem> fb;
            fb.reserve(b.size());
            for (long long x : b) fb.push_back(field.from_int(x));
            return solvable(field, fm, fb);
        };
        bool sq = true, sp = true;
        if (mode == FieldMode::Rational || mode == FieldMode::Both)
            sq = solvable_over(RationalField{});
        if (mode == FieldMode::Prime || mode == FieldMode::Both)
            sp = solvable_over(PrimeField{prime});
        if (mode == FieldMode::Both && sq != sp)
            throw InvariantError("boundary status differs between Q and F_p");
        bool sol = (mode == FieldMode::Prime) ? sp : sq;
        if (!sol) {
            boundary = false;
            break;
        }
    }
    st.boundary = boundary;
    return st;
}

Element DgChain::act(const Element& e, const PsiMonomial& m, bool left) const {
    if (i == 1) throw InvariantError("monomial action not provided on degree +1 chains");
    Element out;
    for (auto [wi, c] : e.coef) {
        std::vector<PsiMonomial> f = words[wi].factors;
        std::optional<PsiMonomial> r =
            left ? psi::mul(p, m, f.front()) : psi::mul(p, f.back(), m);
        if (!r) continue;
        if (left)
            f.front() = *r;
        else
            f.back() = *r;
        int tgt = index_of(f);
        if (tgt < 0) throw InvariantError("monomial action left the word set");
        out.coef[tgt] += c;
        if (out.coef[tgt] == 0) out.coef.erase(tgt);
    }
    return out;
}

Element DgChain::slice_left(const Element& e, int s) const {
    Element out;
    for (auto [wi, c] : e.coef)
        if (words[wi].s == s) out.coef[wi] = c;
    return out;
}

std::string DgChain::describe(const Element& e) const {
    std::ostringstream os;
    bool first = true;
    for (auto [wi, c] : e.coef) {
        if (!first) os << " ";
        first = false;
        os << (c >= 0 ? "+" : "") << c << "*[";
        for (size_t m = 0; m < words[wi].factors.size(); ++m) {
            if (m) os << "|";
            os << words[wi].factors[m].str();
        }
        os << "]";
    }
    if (first) os << "0";
    return os.str();
}

Element concat(const DgChain& a, const Element& ea, const DgChain& b, const Element& eb,
               const DgChain& target) {
    if (a.i > -1 || b.i > -1 || target.i != a.i + b.i)
        throw InvariantError("concat: degree bookkeeping is wrong");
    Element out;
    for (auto [wa, ca] : ea.coef)
        for (auto [wb, cb] : eb.coef) {
            const auto& fa = a.words[wa].factors;
            const auto& fb = b.words[wb].factors;
            auto merged = psi::mul(a.p, fa.back(), fb.front());
            if (!merged) continue;
            std::vector<PsiMonomial> f(fa.begin(), fa.end() - 1);
            f.push_back(*merged);
            f.insert(f.end(), fb.begin() + 1, fb.end());
            int tgt = target.index_of(f);
            if (tgt < 0) throw InvariantError("concat left the word set");
            out.coef[tgt] += ca * cb;
            if (out.coef[tgt] == 0) out.coef.erase(tgt);
        }
    return out;
}

namespace {

// Build a single word from prescribed letter contents (a,b per factor); the
// left vertex of the first factor is given and all later vertices follow from
// the junction convention. Returns nullopt if any factor runs off the quiver.
std::optional<Element> word_from_contents(const DgChain& c, int s1,
                                          const std::vector<std::pair<int, int>>& letters) {
    std::vector<PsiMonomial> f;
    int s = s1;
    for (size_t m = 0; m < letters.size(); ++m) {
        auto [a, b] = letters[m];
        PsiMonomial mon{s + a + b, a, b};
        if (!psi::valid(c.p, mon)) return std::nullopt;
        f.push_back(mon);
        if (m + 1 < letters.size())
            s = junction_next_s(c.style, c.p, static_cast<int>(m) + 1, mon.t);
    }
    int idx = c.index_of(f);
    if (idx < 0) return std::nullopt;
    Element e;
    e.coef[idx] = 1;
    return e;
}

}  // namespace

std::optional<Element> x_cycle(const DgChain& c, int f) {
    int i = c.i;
    if (i > -1) return std::nullopt;
    int xs = -i - 1 - 2 * f;
    if (f < 0 || xs < 0) return std::nullopt;
    std::vector<std::pair<int, int>> letters;
    letters.push_back({0, 0});  // e_p
    for (int r = 0; r < 2 * f; ++r) letters.push_back({0, 1});
    for (int r = 0; r < xs; ++r) letters.push_back({c.p - 1, 0});
    letters.push_back({0, 0});  // e_1
    return word_from_contents(c, c.p, letters);
}

std::optional<Element> y_cycle(const DgChain& c, int f) {
    int i = c.i;
    if (i > -1) return std::nullopt;
    int xs = -i - 2 - 2 * f;
    if (f < 0 || xs < 0) return std::nullopt;
    std::vector<std::pair<int, int>> letters;
    letters.push_back({0, 0});
    for (int r = 0; r < 2 * f; ++r) letters.push_back({0, 1});
    for (int r = 0; r < xs; ++r) letters.push_back({c.p - 1, 0});
    letters.push_back({c.p - 2, 1});  // x^{p-2} xi
    letters.push_back({0, 0});
    return word_from_contents(c, c.p, letters);
}

Element w_element(const DgChain& c) {
    if (c.i != -2) throw InvariantError("w lives in tensor degree -2");
    Element out;
    for (int l = 1; l <= c.p; ++l) {
        auto first = word_from_contents(c, l, {{0, 1}, {0, 1}, {0, 0}});
        if (first) out.coef[first->coef.begin()->first] += 1;
        auto second = word_from_contents(c, l, {{0, 0}, {0, 1}, {0, 1}});
        if (second) out.coef[second->coef.begin()->first] -= 1;
    }
    return out;
}

Element w_power(const DgChain& c2, const DgChain& target, int e) {
    if (e < 1) throw InvariantError("w_power needs e >= 1");
    if (target.i != -2 * e) throw InvariantError("w_power: wrong target degree");
    Element acc = w_element(c2);
    // repeated concatenation through the intermediate degrees
    DgChain cur = c2;
    for (int r = 2; r <= e; ++r) {
        DgChain next = (r == e) ? target : DgChain::build(c2.p, -2 * r, c2.style, 2 * e);
        acc = concat(cur, acc, c2, w_element(c2), next);
        cur = std::move(next);
    }
    return acc;
}

std::optional<Element> xi_chain_element(const DgChain& c, int l) {
    if (c.i > -1) return std::nullopt;
    std::vector<std::pair<int, int>> letters(static_cast<size_t>(1 - c.i), {0, 1});
    return word_from_contents(c, l, letters);
}

}  // namespace weylext::dg
