#include "weylext/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "weylext/report.hpp"

namespace weylext::acceptance {

using model::LatticePoint7;
using model::PolytopeModel;
using schur::BlockAlgebra;

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    CriterionResult res;
    Clock::time_point start = Clock::now();
    std::ostringstream detail;
    bool ok = true;

    Runner(int id, std::string name) {
        res.id = id;
        res.name = std::move(name);
    }

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }

    CriterionResult finish() {
        res.pass = ok;
        res.detail = detail.str();
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
    }
};

}  // namespace

CriterionResult golden_match(const Options& opt) {
    Runner r(1, "golden block match (p=3, q=2)");
    try {
        BlockAlgebra b(3, 2, opt.record.conv);
        auto ref = report::load_reference_csv(opt.reference_csv);
        auto match = report::match_reference(b, ref);
        r.require(match.ok, "no unique matching bijection: " + match.diff);
        if (match.ok) {
            r.detail << "dim=" << b.dim() << ", bijection:";
            for (auto& [label, tuple] : match.bijection)
                r.detail << " " << label << "->" << report::vertex_str(tuple);
        }
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

CriterionResult oracle_equivalence(const Options& opt) {
    Runner r(2, "oracle equivalence (p in {2,3,5}, i in {1,0,-1,...,-4})");
    struct Total {
        int p, i;
        long total;
    };
    const Total expected[] = {{3, -1, 19}, {3, -2, 27}, {3, -3, 37}, {2, -1, 8}, {2, -2, 12}};
    try {
        for (int p : {2, 3, 5}) {
            PolytopeModel m(p, opt.record.conv);
            for (int i : {1, 0, -1, -2, -3, -4}) {
                dg::DgChain chain = dg::DgChain::build(p, i, opt.record.conv.junction);
                GradedDims oracle = chain.homology(opt.mode, static_cast<std::uint64_t>(p));
                GradedDims model = m.row_dims(i);
                if (!(model == oracle)) {
                    r.require(false, "(p=" + std::to_string(p) + ",i=" + std::to_string(i) +
                                         "): " + model.first_mismatch(oracle));
                    return r.finish();
                }
                for (const auto& e : expected)
                    if (e.p == p && e.i == i)
                        r.require(oracle.total() == e.total,
                                  "total at (p=" + std::to_string(p) +
                                      ",i=" + std::to_string(i) + ") is " +
                                      std::to_string(oracle.total()) + ", expected " +
                                      std::to_string(e.total));
                // p = 2 rows must also agree with the symmetric-power bimodule
                if (p == 2 && i <= 0) {
                    psi::VBimodule v = psi::build_V(2, -i);
                    r.require(v.dims == oracle, "(p=2,i=" + std::to_string(i) +
                                                    "): symmetric-power dims disagree");
                }
            }
        }
        r.detail << "18 rows compared sector-by-sector";
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

CriterionResult cycle_certificates(const Options& opt) {
    Runner r(3, "cycle certificates (p=3, i in {-1,...,-4})");
    const int p = 3;
    const auto mode = opt.mode;
    try {
        long checked = 0;
        for (int i : {-1, -2, -3, -4}) {
            dg::DgChain c = dg::DgChain::build(p, i, opt.record.conv.junction);
            // x and y generators for all admissible f
            int fx_max = (i % 2 == 0) ? (-i - 2) / 2 : (-i - 1) / 2;
            int fy_max = (i % 2 == 0) ? (-i - 2) / 2 : (-i - 3) / 2;
            for (int f = 0; f <= fx_max; ++f) {
                auto e = dg::x_cycle(c, f);
                r.require(e.has_value(), "x generator missing at (i,f)=(" +
                                             std::to_string(i) + "," + std::to_string(f) + ")");
                if (!e) return r.finish();
                auto st = c.verify_cycle(*e, mode, p);
                r.require(st.cycle && !st.boundary,
                          "x generator fails at (i,f)=(" + std::to_string(i) + "," +
                              std::to_string(f) + ")");
                ++checked;
            }
            for (int f = 0; f <= fy_max; ++f) {
                auto e = dg::y_cycle(c, f);
                r.require(e.has_value(), "y generator missing at (i,f)=(" +
                                             std::to_string(i) + "," + std::to_string(f) + ")");
                if (!e) return r.finish();
                auto st = c.verify_cycle(*e, mode, p);
                r.require(st.cycle && !st.boundary,
                          "y generator fails at (i,f)=(" + std::to_string(i) + "," +
                              std::to_string(f) + ")");
                ++checked;
            }
            if (i % 2 == 0) {
                // powers of the central degree -2 class, sliced per vertex
                dg::DgChain c2 = dg::DgChain::build(p, -2, opt.record.conv.junction);
                dg::Element we = dg::w_power(c2, c, -i / 2);
                for (int l = 1; l <= p; ++l) {
                    dg::Element slice = c.slice_left(we, l);
                    r.require(!slice.empty(), "w-power slice empty at l=" + std::to_string(l));
                    auto st = c.verify_cycle(slice, mode, p);
                    r.require(st.cycle && !st.boundary,
                              "w-power slice fails at (i,l)=(" + std::to_string(i) + "," +
                                  std::to_string(l) + ")");
                    ++checked;
                }
            } else {
                for (int l = 1; l <= p - 1; ++l) {
                    auto e = dg::xi_chain_element(c, l);
                    r.require(e.has_value(),
                              "xi-chain missing at l=" + std::to_string(l));
                    if (!e) return r.finish();
                    auto st = c.verify_cycle(*e, mode, p);
                    r.require(st.cycle && !st.boundary,
                              "xi-chain fails at (i,l)=(" + std::to_string(i) + "," +
                                  std::to_string(l) + ")");
                    ++checked;
                }
            }
        }
        {
            // super-commutation of the two letters in homology: the difference
            // of the corresponding words is a boundary
            dg::DgChain c1 = dg::DgChain::build(p, -1, opt.record.conv.junction);
            for (int h = 2; h <= p; ++h)
                for (int d = 1; d <= h - 1; ++d)
                    for (int l = 0; l <= h - 2; ++l) {
                        psi::PsiMonomial u1{h, d, 0}, u2{p + 1 - h + l + 1, l, 1};
                        psi::PsiMonomial v1{h, d - 1, 1}, v2{p + 1 - h + l + 1, l + 1, 0};
                        int iu = c1.index_of({u1, u2});
                        int iv = c1.index_of({v1, v2});
                        r.require(iu >= 0 && iv >= 0, "commutation words missing");
                        if (iu < 0 || iv < 0) return r.finish();
                        dg::Element e;
                        e.coef[iu] = 1;
                        e.coef[iv] = 1;
                        auto st = c1.verify_cycle(e, mode, p);
                        r.require(st.cycle && st.boundary,
                                  "commutation relation fails at (h,d,l)=(" +
                                      std::to_string(h) + "," + std::to_string(d) + "," +
                                      std::to_string(l) + ")");
                        ++checked;
                    }
        }
        {
            // xi (x) xi (x) x^{p-1}  -  (-1)^p  x^{p-1} (x) xi (x) xi  is a boundary
            dg::DgChain c2 = dg::DgChain::build(p, -2, opt.record.conv.junction);
            psi::PsiMonomial xi12{2, 0, 1}, xi_top{p, 0, 1}, xp{p, p - 1, 0};
            int ia = c2.index_of({xi12, xi_top, xp});
            int ib = c2.index_of({xp, xi12, xi_top});
            r.require(ia >= 0 && ib >= 0, "two-letter move words missing");
            if (ia < 0 || ib < 0) return r.finish();
            dg::Element e;
            e.coef[ia] = 1;
            e.coef[ib] = (p % 2 == 0) ? -1 : 1;  // minus (-1)^p
            auto st = c2.verify_cycle(e, mode, p);
            r.require(st.cycle && st.boundary, "two-letter move relation fails");
            ++checked;
        }
        r.detail << checked << " certificates verified";
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

CriterionResult bimodule_identities(const Options& opt) {
    Runner r(4, "bimodule identity suite (p in {3,5})");
    try {
        for (int p : {3, 5}) {
            auto M = psi::build_M(p);
            auto Mbar = psi::build_Mbar(p);
            auto Psi = psi::regular(p);
            M.check();
            Mbar.check();
            Psi.check();
            psi::dual(M).check();
            psi::twist(M, psi::Side::Left, psi::Auto::Tau).check();

            GradedDims dM = M.graded_dims();
            r.require(M.dim() == 2L * p * p, "dim M");
            r.require(Mbar.dim() == 2L * p * p - 1, "dim Mbar");
            r.require(Psi.dim() == 1L * p * p, "dim Psi");

            // duality: M* = M <2p>[-2p+3]; involutivity
            r.require(psi::dual(M).graded_dims() == dM.shifted(2 * p, -2 * p + 3),
                      "M dual shift identity at p=" + std::to_string(p));
            r.require(psi::dual(psi::dual(M)).graded_dims() == dM, "dual involution");

            // one-sided decomposition: M = sum_h L<-1-h>[h] on either side
            {
                std::map<std::tuple<int, int, int>, long> left, right;
                for (int h = 0; h < p; ++h) {
                    for (auto [v, j, k] : psi::Ll_dims(p)) left[{v, j - 1 - h, k + h}] += 1;
                    for (auto [v, j, k] : psi::Lr_dims(p)) right[{v, j - 1 - h, k + h}] += 1;
                }
                r.require(dM.left_dims() == left, "left string decomposition");
                r.require(dM.right_dims() == right, "right string decomposition");
            }

            // short exact sequence dims: Psi<-p-1>[p-1] + Psi*<-p+1>[p-2] = M
            {
                GradedDims psid = Psi.graded_dims();
                GradedDims lhs = psid.shifted(-p - 1, p - 1).plus(
                    psid.dual().shifted(-p + 1, p - 2));
                r.require(lhs == dM, "regular/dual extension dims");
            }

            // string module duality: Ll* = Lr <p-1>[2-p]
            {
                std::map<std::tuple<int, int, int>, long> lhs, rhs;
                for (auto [v, j, k] : psi::Ll_dims(p)) lhs[{v, -j, -k}] += 1;
                for (auto [v, j, k] : psi::Lr_dims(p)) rhs[{v, j + p - 1, k + 2 - p}] += 1;
                r.require(lhs == rhs, "one-sided duality");
            }

            // tensor identities; the self-pairing of M carries the same shift
            // as the truncated ones (the <1-p> value printed alongside the
            // statement disagrees with its own derivation and with this
            // computation)
            auto prime = static_cast<std::uint64_t>(p);
            r.require(psi::tensor_over_psi(Psi, M, opt.mode, prime) == dM, "unit tensor");
            r.require(psi::tensor_over_psi(M, Psi, opt.mode, prime) == dM, "unit tensor (right)");
            r.require(psi::tensor_over_psi(M, M, opt.mode, prime) ==
                          dM.shifted(-p - 1, p - 1),
                      "M (x) M shift identity at p=" + std::to_string(p));
            r.require(psi::tensor_over_psi(Mbar, M, opt.mode, prime) ==
                          dM.shifted(-p - 1, p - 1),
                      "Mbar (x) M shift identity at p=" + std::to_string(p));
            r.require(psi::tensor_over_psi(M, Mbar, opt.mode, prime) ==
                          dM.shifted(-p - 1, p - 1),
                      "M (x) Mbar shift identity at p=" + std::to_string(p));
            r.require(psi::tensor_over_psi(Mbar, Mbar, opt.mode, prime) ==
                          dM.shifted(-p - 1, p - 1),
                      "Mbar (x) Mbar shift identity at p=" + std::to_string(p));

            // two-sided sign twist is trivial on M via a diagonal intertwiner:
            // a +-1 assignment with sign[target] = sign[source] * c_M * c_twisted
            {
                auto Mtt = psi::twist(psi::twist(M, psi::Side::Left, psi::Auto::Tau),
                                      psi::Side::Right, psi::Auto::Tau);
                struct Edge {
                    int u, v, w;
                };
                std::vector<Edge> edges;
                bool okall = true;
                for (int g = 0; g < 4 && okall; ++g)
                    for (long i = 0; i < M.dim() && okall; ++i) {
                        if (M.act[g][i].size() != Mtt.act[g][i].size()) {
                            okall = false;
                            break;
                        }
                        for (size_t e = 0; e < M.act[g][i].size(); ++e) {
                            auto [c1, t1] = M.act[g][i][e];
                            auto [c2, t2] = Mtt.act[g][i][e];
                            if (t1 != t2) {
                                okall = false;
                                break;
                            }
                            edges.push_back({static_cast<int>(i), t1, c1 * c2});
                        }
                    }
                std::vector<std::vector<std::pair<int, int>>> adj(M.dim());
                for (auto& e : edges) {
                    adj[e.u].push_back({e.v, e.w});
                    adj[e.v].push_back({e.u, e.w});
                }
                std::vector<int> sign(M.dim(), 0);
                for (long root = 0; root < M.dim() && okall; ++root) {
                    if (sign[root] != 0) continue;
                    sign[root] = 1;
                    std::vector<int> stack{static_cast<int>(root)};
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (auto [v, w] : adj[u])
                            if (sign[v] == 0) {
                                sign[v] = sign[u] * w;
                                stack.push_back(v);
                            }
                    }
                }
                for (auto& e : edges) okall = okall && sign[e.v] == sign[e.u] * e.w;
                r.require(okall, "two-sided twist intertwiner at p=" + std::to_string(p));
            }
        }
        r.detail << "identities verified at p=3 and p=5";
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

namespace {

/// Full product table: entry is 0 for a zero product, otherwise +-(index+1).
class ProductTable {
public:
    explicit ProductTable(const BlockAlgebra& b) : n_(b.dim()), tab_(n_ * n_, 0) {
        for (long x = 0; x < n_; ++x)
            for (long y = 0; y < n_; ++y) {
                auto pr = b.multiply(static_cast<int>(x), static_cast<int>(y));
                if (pr.status == BlockAlgebra::Product::Status::Ok)
                    tab_[x * n_ + y] = pr.sign * (pr.index + 1);
            }
    }
    long at(long x, long y) const { return tab_[x * n_ + y]; }
    bool associative(long x, long y, long z) const {
        long xy = at(x, y), yz = at(y, z);
        long l = xy == 0 ? 0 : (xy > 0 ? at(xy - 1, z) : -at(-xy - 1, z));
        long r = yz == 0 ? 0 : (yz > 0 ? at(x, yz - 1) : -at(x, -yz - 1));
        return l == r;
    }

private:
    long n_;
    std::vector<long> tab_;
};

}  // namespace

CriterionResult algebraic_properties(const Options& opt) {
    Runner r(5, "algebraic property suite");
    try {
        // exhaustive closure and associativity for the small blocks; building
        // the full product table already exercises closure (a violation throws)
        for (int q : {1, 2}) {
            BlockAlgebra b(3, q, opt.record.conv);
            long n = b.dim();
            r.require(b.vertices().size() == static_cast<size_t>(q == 1 ? 3 : 9),
                      "idempotent count at p=3");
            ProductTable tab(b);
            for (long x = 0; x < n && r.ok; ++x)
                for (long y = 0; y < n && r.ok; ++y)
                    for (long z = 0; z < n && r.ok; ++z)
                        r.require(tab.associative(x, y, z),
                                  "associativity fails at (" + std::to_string(x) + "," +
                                      std::to_string(y) + "," + std::to_string(z) +
                                      ") (p=3,q=" + std::to_string(q) + ")");
        }
        // randomized triples at p=5, q=2 (fixed seed)
        {
            BlockAlgebra b(5, 2, opt.record.conv);
            r.require(b.vertices().size() == 25, "idempotent count at p=5");
            ProductTable tab(b);
            std::mt19937_64 rng(opt.seed);
            std::uniform_int_distribution<long> pick(0, b.dim() - 1);
            for (int trial = 0; trial < 10000 && r.ok; ++trial) {
                long x = pick(rng), y = pick(rng), z = pick(rng);
                r.require(tab.associative(x, y, z),
                          "associativity fails at (" + std::to_string(x) + "," +
                              std::to_string(y) + "," + std::to_string(z) + ") (p=5,q=2)");
            }
        }
        // basis points are unique per (s,i,j,k,t) over the window
        for (int p : {2, 3, 5}) {
            PolytopeModel m(p, opt.record.conv);
            (void)m.enumerate_points(-6, 1);  // throws on any collision
        }
        // idempotents act as a two-sided unit
        {
            BlockAlgebra b(3, 2, opt.record.conv);
            for (long i = 0; i < b.dim() && r.ok; ++i) {
                const auto& m = b.basis()[i];
                int le = b.idempotent_index(m.left_tuple());
                int re = b.idempotent_index(m.right_tuple());
                auto pl = b.multiply(le, static_cast<int>(i));
                auto pr = b.multiply(static_cast<int>(i), re);
                r.require(pl.status == BlockAlgebra::Product::Status::Ok &&
                              pl.index == i && pl.sign == 1 &&
                              pr.status == BlockAlgebra::Product::Status::Ok &&
                              pr.index == i && pr.sign == 1,
                          "idempotents are not a two-sided unit at basis " +
                              std::to_string(i));
            }
        }
        // embedding into the next block
        {
            BlockAlgebra b1(3, 1, opt.record.conv);
            BlockAlgebra b2(3, 2, opt.record.conv);
            std::map<int, int> img;
            for (long i = 0; i < b1.dim(); ++i) {
                auto e = schur::embed(b1.basis()[i]);
                int idx = b2.index_of(e);
                r.require(idx >= 0, "embedded chain missing");
                r.require(e.jdeg() == b1.basis()[i].jdeg() &&
                              e.kdeg() == b1.basis()[i].kdeg(),
                          "embedding is not degree-preserving");
                for (auto& [k, v] : img)
                    r.require(v != idx, "embedding not injective");
                img[static_cast<int>(i)] = idx;
            }
            for (long x = 0; x < b1.dim() && r.ok; ++x)
                for (long y = 0; y < b1.dim() && r.ok; ++y) {
                    auto p1 = b1.multiply(static_cast<int>(x), static_cast<int>(y));
                    auto p2 = b2.multiply(img[static_cast<int>(x)], img[static_cast<int>(y)]);
                    bool same;
                    if (p1.status != BlockAlgebra::Product::Status::Ok)
                        same = p2.status != BlockAlgebra::Product::Status::Ok;
                    else
                        same = p2.status == BlockAlgebra::Product::Status::Ok &&
                               p2.sign == p1.sign && p2.index == img[p1.index];
                    r.require(same, "embedding is not multiplicative");
                }
            // corner-compatible Cartan data over the embedded vertices
            auto c1 = report::cartan(b1);
            auto c2 = report::cartan(b2);
            for (auto& [key, dm] : c1.entries()) {
                report::Vertex f{1}, c{1};
                f.insert(f.end(), key.first.begin(), key.first.end());
                c.insert(c.end(), key.second.begin(), key.second.end());
                const auto* other = c2.entry(f, c);
                r.require(other && *other == dm, "corner Cartan data differs");
            }
        }
        r.detail << "closure, associativity, units, uniqueness and embedding verified";
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

CriterionResult field_robustness(const Options& opt) {
    Runner r(6, "field robustness (Q versus F_p)");
    try {
        long compared = 0;
        for (int p : {2, 3, 5}) {
            for (int i : {1, 0, -1, -2, -3}) {
                dg::DgChain chain = dg::DgChain::build(p, i, opt.record.conv.junction);
                GradedDims hq = chain.homology(FieldMode::Rational, p);
                GradedDims hp = chain.homology(FieldMode::Prime, p);
                r.require(hq == hp, "homology dims differ over Q and F_p at (p=" +
                                        std::to_string(p) + ",i=" + std::to_string(i) + ")");
                ++compared;
            }
            auto M = psi::build_M(p);
            r.require(psi::tensor_over_psi(M, M, FieldMode::Rational, p) ==
                          psi::tensor_over_psi(M, M, FieldMode::Prime, p),
                      "tensor dims differ over Q and F_p at p=" + std::to_string(p));
            ++compared;
        }
        r.detail << compared
                 << " computations repeated over both fields; criteria 2-4 also run in "
                    "dual-field mode";
    } catch (const std::exception& e) {
        r.require(false, e.what());
    }
    return r.finish();
}

std::vector<CriterionResult> run_all(const Options& opt) {
    return {golden_match(opt),        oracle_equivalence(opt), cycle_certificates(opt),
            bimodule_identities(opt), algebraic_properties(opt), field_robustness(opt)};
}

}  // namespace weylext::acceptance
