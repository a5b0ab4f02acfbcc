#include "weylext/schur.hpp"

#include <algorithm>

#include "weylext/grading.hpp"

namespace weylext::schur {

using model::LatticePoint7;

std::vector<int> MuMonomial::left_tuple() const {
    std::vector<int> v;
    v.reserve(factors.size());
    for (const auto& w : factors) v.push_back(w.s);
    return v;
}

std::vector<int> MuMonomial::right_tuple() const {
    std::vector<int> v;
    v.reserve(factors.size());
    for (const auto& w : factors) v.push_back(w.t);
    return v;
}

int MuMonomial::jdeg() const {
    int j = 0;
    for (const auto& w : factors) j += w.j;
    return j;
}

int MuMonomial::kdeg() const {
    int k = 0;
    for (const auto& w : factors) k += w.k;
    return k;
}

std::vector<int> MuMonomial::flat_key() const {
    std::vector<int> v;
    v.reserve(factors.size() * 7 + 1);
    for (const auto& w : factors) {
        v.push_back(w.s);
        v.push_back(w.i);
        v.push_back(w.j);
        v.push_back(w.k);
        v.push_back(w.a);
        v.push_back(w.b);
        v.push_back(w.t);
    }
    v.push_back(alpha);
    return v;
}

std::vector<int> weight(const MuMonomial& m) {
    std::vector<int> w;
    for (size_t l = 0; l + 1 < m.factors.size(); ++l)
        w.push_back(m.factors[l + 1].i - m.factors[l].j);
    if (!m.factors.empty()) w.push_back(m.alpha - m.factors.back().j);
    return w;
}

BlockAlgebra::BlockAlgebra(int p, int q, model::Conventions conv, std::optional<long> k_max)
    : p_(p), q_(q), mod_(p, conv), k_max_(k_max) {
    if (q < 1) throw InvariantError("block algebra needs q >= 1");
    // rows are finite; cache them as they appear
    std::map<int, std::vector<LatticePoint7>> rows;
    auto row = [&](int i) -> const std::vector<LatticePoint7>& {
        auto it = rows.find(i);
        if (it == rows.end()) it = rows.insert({i, mod_.row_points(i)}).first;
        return it->second;
    };

    std::vector<LatticePoint7> cur;
    auto rec = [&](auto&& self, int l, long ksum) -> void {
        if (l == q_) {
            MuMonomial m;
            m.factors = cur;
            m.alpha = cur.back().j;
            std::vector<int> wt = weight(m);
            if (!std::all_of(wt.begin(), wt.end(), [](int x) { return x == 0; }))
                throw InvariantError("enumerated chain has nonzero weight");
            basis_.push_back(std::move(m));
            return;
        }
        int need_i = l == 0 ? 0 : cur.back().j;
        for (const auto& w : row(need_i)) {
            if (w.k < 0)
                throw InvariantError("basis point with negative k: " + w.str());
            if (k_max_ && ksum + w.k > *k_max_) continue;
            cur.push_back(w);
            self(self, l + 1, ksum + w.k);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);

    std::sort(basis_.begin(), basis_.end(), [](const MuMonomial& a, const MuMonomial& b) {
        return a.flat_key() < b.flat_key();
    });
    for (size_t i = 0; i < basis_.size(); ++i)
        index_[basis_[i].flat_key()] = static_cast<int>(i);

    // idempotents: all-unit chains, one per vertex tuple
    std::vector<int> tuple(q_, 1);
    for (;;) {
        MuMonomial e;
        for (int l = 0; l < q_; ++l) e.factors.push_back(mod_.unit(tuple[l]));
        e.alpha = 0;
        int idx = index_of(e);
        if (idx < 0) throw InvariantError("idempotent chain missing from basis");
        vertices_.push_back(tuple);
        idempotents_[tuple] = idx;
        int l = q_ - 1;
        while (l >= 0 && tuple[l] == p_) tuple[l--] = 1;
        if (l < 0) break;
        ++tuple[l];
    }
}

int BlockAlgebra::index_of(const MuMonomial& m) const {
    auto it = index_.find(m.flat_key());
    return it == index_.end() ? -1 : it->second;
}

bool BlockAlgebra::is_idempotent(int idx) const {
    const MuMonomial& m = basis_[idx];
    for (const auto& w : m.factors)
        if (!mod_.is_unit(w)) return false;
    return true;
}

int BlockAlgebra::idempotent_index(const std::vector<int>& tuple) const {
    auto it = idempotents_.find(tuple);
    return it == idempotents_.end() ? -1 : it->second;
}

BlockAlgebra::Product BlockAlgebra::multiply(const MuMonomial& a, const MuMonomial& b) const {
    Product out;
    if (a.factors.size() != b.factors.size()) throw InvariantError("mixed q in product");
    MuMonomial r;
    r.factors.reserve(a.factors.size());
    int sign = 1;
    for (size_t l = 0; l < a.factors.size(); ++l) {
        model::SignedPoint sp = mod_.multiply(a.factors[l], b.factors[l]);
        if (sp.is_zero()) return out;
        r.factors.push_back(sp.point);
        sign *= sp.sign;
    }
    std::vector<int> ka, kb;
    for (const auto& w : a.factors) ka.push_back(w.k);
    for (const auto& w : b.factors) kb.push_back(w.k);
    sign *= shuffle_sign(ka, kb);
    r.alpha = a.alpha + b.alpha;
    if (r.alpha != r.factors.back().j)
        throw InvariantError("product chain has inconsistent Laurent exponent");
    out.chain = r;
    out.sign = sign;
    int idx = index_of(r);
    if (idx >= 0) {
        out.status = Product::Status::Ok;
        out.index = idx;
        return out;
    }
    if (k_max_ && r.kdeg() > *k_max_) {
        out.status = Product::Status::OutOfWindow;
        return out;
    }
    throw InvariantError("closure violation: product chain not in basis");
}

BlockAlgebra::Product BlockAlgebra::multiply(int ia, int ib) const {
    return multiply(basis_[ia], basis_[ib]);
}

MuMonomial embed(const MuMonomial& m) {
    MuMonomial r;
    r.factors.reserve(m.factors.size() + 1);
    r.factors.push_back({1, 0, 0, 0, 0, 0, 1});
    r.factors.insert(r.factors.end(), m.factors.begin(), m.factors.end());
    r.alpha = m.alpha;
    return r;
}

}  // namespace weylext::schur
