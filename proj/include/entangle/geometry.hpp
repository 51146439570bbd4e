#ifndef ENTANGLE_GEOMETRY_HPP
#define ENTANGLE_GEOMETRY_HPP

#include <string>
#include <vector>

namespace entangle {

/// A sampled curve in the (n_XX, n_ZZ) plane of the slice at n_XY = 0.
struct BoundaryCurve {
    std::string name;
    bool in_state_space{false};  ///< every point is a physical state
    std::vector<double> n_xx;
    std::vector<double> n_zz;
};

/// Zero loci of the characteristic-polynomial coefficients and the
/// entangled/separable boundary:
///   ellipse       2 n_XX^2 + n_ZZ^2 = 3           (a2 = 0)
///   parabola      n_ZZ = 1 - 2 n_XX^2             (a3 = 0)
///   base          n_ZZ = -1, |n_XX| <= 1          (a3 = 0)
///   side_left/right  2|n_XX| + n_ZZ = 1           (a4 = 0)
///   separability_left/right  |n_XX| = (1 + n_ZZ)/2, clipped to the triangle
///   fully_mixed   the single point (0, 0)
std::vector<BoundaryCurve> d3_boundary_curves(std::size_t samples = 201);

}  // namespace entangle

#endif  // ENTANGLE_GEOMETRY_HPP
