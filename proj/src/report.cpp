#include "weylext/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace weylext::report {

using schur::BlockAlgebra;
using schur::MuMonomial;

std::string vertex_str(const Vertex& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void CartanTable::add(const Vertex& factor, const Vertex& column, int j, int k, long n) {
    map_[{factor, column}][{j, k}] += n;
}

const CartanTable::DegMap* CartanTable::entry(const Vertex& factor,
                                              const Vertex& column) const {
    auto it = map_.find({factor, column});
    return it == map_.end() ? nullptr : &it->second;
}

long CartanTable::column_total(const Vertex& column) const {
    long n = 0;
    for (auto& [key, dm] : map_)
        if (key.second == column)
            for (auto& [d, c] : dm) n += c;
    return n;
}

long CartanTable::total() const {
    long n = 0;
    for (auto& [key, dm] : map_)
        for (auto& [d, c] : dm) n += c;
    return n;
}

std::string CartanTable::to_csv() const {
    std::ostringstream os;
    os << "column_vertex,factor_vertex,j,k,multiplicity\n";
    for (auto& [key, dm] : map_)
        for (auto& [d, c] : dm)
            os << vertex_str(key.second) << "," << vertex_str(key.first) << "," << d.first
               << "," << d.second << "," << c << "\n";
    return os.str();
}

std::string CartanTable::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [key, dm] : map_)
        for (auto& [d, c] : dm)
            j.push_back({{"column", key.second},
                         {"factor", key.first},
                         {"j", d.first},
                         {"k", d.second},
                         {"dim", c}});
    return j.dump(2);
}

CartanTable cartan(const BlockAlgebra& b) {
    CartanTable t;
    for (const auto& m : b.basis())
        t.add(m.left_tuple(), m.right_tuple(), m.jdeg(), m.kdeg());
    return t;
}

long ext_dim(const CartanTable& c, const Vertex& from, const Vertex& to, int k,
             std::optional<int> j) {
    const auto* dm = c.entry(to, from);
    if (!dm) return 0;
    long n = 0;
    for (auto& [d, cnt] : *dm)
        if (d.second == k && (!j || d.first == *j)) n += cnt;
    return n;
}

QuiverGraph quiver(const BlockAlgebra& b) {
    long n = b.dim();
    std::vector<char> in_rad(n, 0), in_rad2(n, 0);
    std::vector<int> rad;
    for (long i = 0; i < n; ++i)
        if (!b.is_idempotent(static_cast<int>(i))) {
            in_rad[i] = 1;
            rad.push_back(static_cast<int>(i));
        }
    // products of basis chains are single signed chains, so the radical square
    // is spanned by the reachable basis elements: no cancellation can occur
    for (int i : rad)
        for (int j : rad) {
            auto pr = b.multiply(i, j);
            if (pr.status == BlockAlgebra::Product::Status::Ok) {
                if (!in_rad[pr.index])
                    throw InvariantError("radical audit: rad*rad reached an idempotent");
                in_rad2[pr.index] = 1;
            }
        }
    // nilpotence audit
    {
        std::set<int> layer(rad.begin(), rad.end());
        int steps = 0;
        while (!layer.empty()) {
            if (++steps > static_cast<int>(rad.size()) + 1)
                throw InvariantError("radical audit: candidate is not nilpotent");
            std::set<int> next;
            for (int i : rad)
                for (int j : layer) {
                    auto pr = b.multiply(i, j);
                    if (pr.status == BlockAlgebra::Product::Status::Ok) next.insert(pr.index);
                }
            layer = std::move(next);
        }
    }
    QuiverGraph g;
    g.vertices = b.vertices();
    for (int i : rad)
        if (!in_rad2[i]) {
            const MuMonomial& m = b.basis()[i];
            if (m.jdeg() == 0 && m.kdeg() == 0)
                throw InvariantError("radical audit: arrow in degree (0,0)");
            g.arrows.push_back({m.right_tuple(), m.left_tuple(), m.jdeg(), m.kdeg()});
        }
    std::sort(g.arrows.begin(), g.arrows.end());
    return g;
}

std::string QuiverGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph block {\n";
    for (const auto& v : vertices) os << "  \"" << vertex_str(v) << "\";\n";
    for (const auto& a : arrows)
        os << "  \"" << vertex_str(a.source) << "\" -> \"" << vertex_str(a.target)
           << "\" [label=\"j=" << a.j << ",k=" << a.k << "\"];\n";
    os << "}\n";
    return os.str();
}

long ReferenceBlock::column_total(int column) const {
    long n = 0;
    for (auto& [key, dm] : cartan)
        if (key.first == column)
            for (auto& [d, c] : dm) n += c;
    return n;
}

ReferenceBlock load_reference_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw VerifyError("cannot open reference file: " + path);
    ReferenceBlock ref;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.empty()) continue;
        try {
            if (cells[0] == "cartan" && cells.size() == 6) {
                int col = std::stoi(cells[1]), fac = std::stoi(cells[2]);
                int j = std::stoi(cells[3]), k = std::stoi(cells[4]);
                long mult = std::stol(cells[5]);
                ref.cartan[{col, fac}][{j, k}] += mult;
                ref.nvertices = std::max({ref.nvertices, col, fac});
            } else if (cells[0] == "arrow" && cells.size() == 5) {
                int src = std::stoi(cells[1]), tgt = std::stoi(cells[2]);
                int j = std::stoi(cells[3]), k = std::stoi(cells[4]);
                ref.arrows.push_back({src, tgt, j, k});
                ref.nvertices = std::max({ref.nvertices, src, tgt});
            } else {
                throw VerifyError("bad row kind");
            }
        } catch (const std::exception&) {
            throw VerifyError("malformed reference row at " + path + ":" +
                              std::to_string(lineno) + ": " + line);
        }
    }
    std::sort(ref.arrows.begin(), ref.arrows.end());
    return ref;
}

ReferenceBlock restrict_reference(const ReferenceBlock& ref, const std::vector<int>& keep) {
    std::map<int, int> relabel;
    for (size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i) + 1;
    ReferenceBlock out;
    out.nvertices = static_cast<int>(keep.size());
    for (auto& [key, dm] : ref.cartan) {
        auto c = relabel.find(key.first);
        auto f = relabel.find(key.second);
        if (c == relabel.end() || f == relabel.end()) continue;
        out.cartan[{c->second, f->second}] = dm;
    }
    for (auto& [src, tgt, j, k] : ref.arrows) {
        auto s = relabel.find(src);
        auto t = relabel.find(tgt);
        if (s == relabel.end() || t == relabel.end()) continue;
        out.arrows.push_back({s->second, t->second, j, k});
    }
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

namespace {

// degree multiset signature of a vertex: all (j,k,count) of its column and row
std::string signature_of(const std::map<std::pair<int, int>,
                                        std::map<std::pair<int, int>, long>>& table,
                         int v) {
    std::map<std::tuple<int, int, int>, long> sig;  // (which, j, k) -> count
    for (auto& [key, dm] : table) {
        for (auto& [d, c] : dm) {
            if (key.first == v) sig[{0, d.first, d.second}] += c;
            if (key.second == v) sig[{1, d.first, d.second}] += c;
        }
    }
    std::ostringstream os;
    for (auto& [k, c] : sig)
        os << std::get<0>(k) << ":" << std::get<1>(k) << ":" << std::get<2>(k) << ":" << c
           << ";";
    return os.str();
}

}  // namespace

MatchResult match_reference(const BlockAlgebra& b, const ReferenceBlock& ref) {
    MatchResult res;
    CartanTable ct = cartan(b);
    QuiverGraph qv = quiver(b);
    const auto& verts = b.vertices();
    int n = static_cast<int>(verts.size());
    if (n != ref.nvertices) {
        res.diff = "vertex count mismatch: " + std::to_string(n) + " vs " +
                   std::to_string(ref.nvertices);
        return res;
    }

    // computed-side tables in integer-label form for signatures
    std::map<Vertex, int> vid;
    for (int i = 0; i < n; ++i) vid[verts[i]] = i + 1;
    std::map<std::pair<int, int>, std::map<std::pair<int, int>, long>> btab;
    for (auto& [key, dm] : ct.entries())
        // reference rows are keyed (column, factor)
        btab[{vid[key.second], vid[key.first]}] = dm;

    std::map<std::string, std::vector<int>> by_sig;
    for (int i = 1; i <= n; ++i) by_sig[signature_of(btab, i)].push_back(i);

    std::vector<int> cand_of(n + 1);  // reference label -> candidate list id is sig
    std::vector<std::vector<int>> cands(n + 1);
    for (int r = 1; r <= n; ++r) {
        std::string sig = signature_of(ref.cartan, r);
        auto it = by_sig.find(sig);
        if (it == by_sig.end()) {
            res.diff = "no vertex matches the degree signature of reference vertex " +
                       std::to_string(r);
            return res;
        }
        cands[r] = it->second;
    }

    std::vector<int> phi(n + 1, 0);  // reference label -> computed label
    std::vector<char> used(n + 1, 0);
    std::vector<std::vector<int>> solutions;

    auto cartan_ok = [&](int r, int img) {
        // check every pair involving r whose other side is already assigned
        for (int r2 = 1; r2 <= n; ++r2) {
            if (phi[r2] == 0 && r2 != r) continue;
            int i2 = r2 == r ? img : phi[r2];
            for (auto [a, bb] : {std::pair<int, int>{r, r2}, std::pair<int, int>{r2, r}}) {
                int ia = a == r ? img : phi[a];
                int ib = bb == r ? img : phi[bb];
                auto rit = ref.cartan.find({a, bb});
                auto bit = btab.find({ia, ib});
                bool re = rit == ref.cartan.end() || rit->second.empty();
                bool be = bit == btab.end() || bit->second.empty();
                if (re != be) return false;
                if (!re && rit->second != bit->second) return false;
            }
            (void)i2;
        }
        return true;
    };

    auto rec = [&](auto&& self, int r) -> void {
        if (static_cast<int>(solutions.size()) >= 2) return;
        if (r > n) {
            // full quiver check under phi
            std::vector<std::tuple<int, int, int, int>> mapped;
            for (const auto& a : qv.arrows) {
                int sl = 0, tl = 0;
                for (int x = 1; x <= n; ++x) {
                    if (verts[phi[x] - 1] == a.source) sl = x;
                    if (verts[phi[x] - 1] == a.target) tl = x;
                }
                mapped.push_back({sl, tl, a.j, a.k});
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped == ref.arrows) solutions.push_back(std::vector<int>(phi));
            return;
        }
        for (int img : cands[r]) {
            if (used[img]) continue;
            if (!cartan_ok(r, img)) continue;
            phi[r] = img;
            used[img] = 1;
            self(self, r + 1);
            phi[r] = 0;
            used[img] = 0;
        }
    };
    rec(rec, 1);

    res.solutions = static_cast<int>(solutions.size());
    if (solutions.size() == 1) {
        res.ok = true;
        for (int r = 1; r <= n; ++r) res.bijection[r] = verts[solutions[0][r] - 1];
        return res;
    }
    if (solutions.empty()) {
        // produce a diff against the signature-forced assignment when unique
        bool forced = true;
        for (int r = 1; r <= n; ++r) forced = forced && cands[r].size() == 1;
        if (forced) {
            for (int r = 1; r <= n; ++r) phi[r] = cands[r][0];
            for (int a = 1; a <= n && res.diff.empty(); ++a)
                for (int bb = 1; bb <= n && res.diff.empty(); ++bb) {
                    auto rit = ref.cartan.find({a, bb});
                    auto bit = btab.find({phi[a], phi[bb]});
                    auto re = rit == ref.cartan.end() ? CartanTable::DegMap{}
                                                      : CartanTable::DegMap(rit->second);
                    auto be = bit == btab.end() ? CartanTable::DegMap{}
                                                : CartanTable::DegMap(bit->second);
                    if (re != be) {
                        std::ostringstream os;
                        os << "cartan mismatch at reference (column=" << a
                           << ", factor=" << bb << ")";
                        for (auto& [d, c] : re)
                            if (!be.count(d) || be[d] != c)
                                os << " expected (j=" << d.first << ",k=" << d.second
                                   << ")x" << c;
                        for (auto& [d, c] : be)
                            if (!re.count(d) || re[d] != c)
                                os << " got (j=" << d.first << ",k=" << d.second << ")x" << c;
                        res.diff = os.str();
                    }
                }
            if (res.diff.empty()) res.diff = "quiver arrow multisets differ";
        } else {
            res.diff = "no degree-preserving bijection matches";
        }
    } else {
        res.diff = "bijection is not unique (" + std::to_string(solutions.size()) + ")";
    }
    return res;
}

std::map<std::pair<int, int>, long> poincare(const CartanTable& c, const Vertex& u,
                                             const Vertex& v) {
    const auto* dm = c.entry(u, v);
    return dm ? *dm : std::map<std::pair<int, int>, long>{};
}

std::string poincare_str(const std::map<std::pair<int, int>, long>& poly) {
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : poly) {
        auto [j, k] = d;
        if (!first) os << " + ";
        first = false;
        bool unit = j == 0 && k == 0;
        if (c != 1 || unit) os << c;
        bool need_star = c != 1 && !unit;
        if (j != 0) {
            if (need_star) os << "*";
            os << "x" << (j == 1 ? "" : "^" + std::to_string(j));
            need_star = true;
        }
        if (k != 0) {
            if (need_star) os << "*";
            os << "y" << (k == 1 ? "" : "^" + std::to_string(k));
        }
    }
    return os.str();
}

std::string block_to_json(const BlockAlgebra& b, bool with_products) {
    nlohmann::json out;
    out["p"] = b.p();
    out["q"] = b.q();
    out["dim"] = b.dim();
    out["vertices"] = b.vertices();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& m : b.basis()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& w : m.factors)
            factors.push_back({w.s, w.i, w.j, w.k, w.a, w.b, w.t});
        basis.push_back({{"factors", factors},
                         {"alpha", m.alpha},
                         {"left", m.left_tuple()},
                         {"right", m.right_tuple()},
                         {"j", m.jdeg()},
                         {"k", m.kdeg()}});
    }
    out["basis"] = basis;
    if (with_products) {
        nlohmann::json prods = nlohmann::json::array();
        for (long i = 0; i < b.dim(); ++i)
            for (long j = 0; j < b.dim(); ++j) {
                auto pr = b.multiply(static_cast<int>(i), static_cast<int>(j));
                if (pr.status == BlockAlgebra::Product::Status::Ok)
                    prods.push_back({i, j, pr.sign, pr.index});
            }
        out["products"] = prods;
    }
    return out.dump(2);
}

std::string default_reference_path(int p, int q) {
    return std::string(WEYLEXT_DATA_DIR) + "/ref_p" + std::to_string(p) + "_q" +
           std::to_string(q) + ".csv";
}

}  // namespace weylext::report
