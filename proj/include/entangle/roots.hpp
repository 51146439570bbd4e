#ifndef ENTANGLE_ROOTS_HPP
#define ENTANGLE_ROOTS_HPP

#include <cmath>
#include <utility>

namespace entangle {

/// Shrinks [inside, outside] around the boundary of the set {t : pred(t)},
/// assuming pred(inside) && !pred(outside). Either end may be the larger one.
template <class Pred>
std::pair<double, double> bisect_boundary(Pred&& pred, double inside, double outside, int iterations) {
    for (int i = 0; i < iterations; ++i) {
        const double mid = inside + (outside - inside) / 2;
        if (mid == inside || mid == outside) break;
        if (pred(mid))
            inside = mid;
        else
            outside = mid;
    }
    return {inside, outside};
}

/// Golden-section search for the minimiser of a unimodal f on [lo, hi].
template <class F>
double golden_section_min(F&& f, double lo, double hi, int iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && b - a > 0; ++i) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (c >= d) break;
    }
    return fc <= fd ? c : d;
}

}  // namespace entangle

#endif  // ENTANGLE_ROOTS_HPP
