#include "weylext/grading.hpp"

#include <sstream>

#include "weylext/scalar.hpp"

namespace weylext {

int shuffle_sign(const std::vector<int>& left_kdegs, const std::vector<int>& right_kdegs) {
    if (left_kdegs.size() != right_kdegs.size())
        throw InvariantError("shuffle_sign: factor count mismatch");
    int e = 0;
    for (size_t u = 0; u < left_kdegs.size(); ++u)
        for (size_t v = 0; v < u; ++v) e += left_kdegs[u] * right_kdegs[v];
    return (e & 1) ? -1 : +1;
}

void GradedDims::add(int s, int t, int j, int k, long n) {
    if (n == 0) return;
    long& d = dims_[Key{s, t, j, k}];
    d += n;
    if (d < 0) throw InvariantError("GradedDims: negative dimension");
    if (d == 0) dims_.erase(Key{s, t, j, k});
}

long GradedDims::at(int s, int t, int j, int k) const {
    auto it = dims_.find(Key{s, t, j, k});
    return it == dims_.end() ? 0 : it->second;
}

long GradedDims::total() const {
    long n = 0;
    for (auto& [k, v] : dims_) n += v;
    return n;
}

std::string GradedDims::first_mismatch(const GradedDims& other) const {
    auto a = dims_.begin();
    auto b = other.dims_.begin();
    std::ostringstream os;
    while (a != dims_.end() || b != other.dims_.end()) {
        if (b == other.dims_.end() || (a != dims_.end() && a->first < b->first)) {
            os << "(s=" << a->first.s << ",t=" << a->first.t << ",j=" << a->first.j
               << ",k=" << a->first.k << "): " << a->second << " vs 0";
            return os.str();
        }
        if (a == dims_.end() || b->first < a->first) {
            os << "(s=" << b->first.s << ",t=" << b->first.t << ",j=" << b->first.j
               << ",k=" << b->first.k << "): 0 vs " << b->second;
            return os.str();
        }
        if (a->second != b->second) {
            os << "(s=" << a->first.s << ",t=" << a->first.t << ",j=" << a->first.j
               << ",k=" << a->first.k << "): " << a->second << " vs " << b->second;
            return os.str();
        }
        ++a, ++b;
    }
    return {};
}

std::map<std::tuple<int, int, int>, long> GradedDims::left_dims() const {
    std::map<std::tuple<int, int, int>, long> out;
    for (auto& [key, n] : dims_) out[{key.s, key.j, key.k}] += n;
    return out;
}

std::map<std::tuple<int, int, int>, long> GradedDims::right_dims() const {
    std::map<std::tuple<int, int, int>, long> out;
    for (auto& [key, n] : dims_) out[{key.t, key.j, key.k}] += n;
    return out;
}

GradedDims GradedDims::dual() const {
    GradedDims out;
    for (auto& [key, n] : dims_) out.add(key.t, key.s, -key.j, -key.k, n);
    return out;
}

GradedDims GradedDims::shifted(int dj, int dk) const {
    GradedDims out;
    for (auto& [key, n] : dims_) out.add(key.s, key.t, key.j + dj, key.k + dk, n);
    return out;
}

GradedDims GradedDims::plus(const GradedDims& o) const {
    GradedDims out = *this;
    for (auto& [key, n] : o.dims_) out.add(key.s, key.t, key.j, key.k, n);
    return out;
}

std::string GradedDims::to_csv() const {
    std::ostringstream os;
    os << "s,t,j,k,dim\n";
    for (auto& [key, n] : dims_)
        os << key.s << "," << key.t << "," << key.j << "," << key.k << "," << n << "\n";
    return os.str();
}

}  // namespace weylext
