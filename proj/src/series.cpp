#include "series.hpp"

#include <map>
#include <mutex>

namespace hmsing {

namespace {

// b_k with t/(1-exp(-t)) = sum b_k t^k, computed by inverting
// (1-exp(-t))/t = sum_{k>=0} (-1)^k t^k / (k+1)!.
XSeries todd_base(int order) {
    XSeries a(order);
    Rat fact(1);  // (k+1)!
    for (int k = 0; k <= order; ++k) {
        fact *= Rat(k + 1);
        a.coeff(k) = (k % 2 == 0) ? Rat(1) / fact : Rat(-1) / fact;
    }
    return a.inverse();
}

XYSeries compute_qy(int order) {
    XSeries b = todd_base(order);
    // Substitute t = x(1+y), then subtract xy.
    YPoly one_plus_y = YPoly(Rat(1)) + YPoly::monomial(1, Rat(1));
    XYSeries q(order);
    YPoly p(Rat(1));  // (1+y)^k
    for (int k = 0; k <= order; ++k) {
        q.coeff(k) = p * b.coeff(k);
        p *= one_plus_y;
    }
    if (order >= 1) q.coeff(1) -= YPoly::monomial(1, Rat(1));
    return q;
}

std::mutex qy_cache_mutex;
std::map<int, XYSeries>& qy_cache() {
    static std::map<int, XYSeries> cache;
    return cache;
}

}  // namespace

XYSeries qy_series(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    std::lock_guard<std::mutex> lock(qy_cache_mutex);
    auto& cache = qy_cache();
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_qy(order)).first;
    return it->second;
}

XSeries specialize_y(const XYSeries& s, const Rat& y) {
    XSeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r.coeff(k) = s.coeff(k).eval(y);
    return r;
}

}  // namespace hmsing
