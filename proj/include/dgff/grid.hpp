#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <unordered_map>
#include <vector>

#include "dgff/exact.hpp"

namespace dgff {

/// A point of the quarter-integer grid. Coordinates are stored in units
/// of 1/4, so the embedded complex point is (qx/4, qy/4). This makes the
/// primal, dual, medial and corner sublattices all exactly representable.
struct GridPoint {
    int qx = 0, qy = 0;

    constexpr GridPoint() = default;
    constexpr GridPoint(int x, int y) : qx(x), qy(y) {}

    static GridPoint primal(int x, int y) { return {4 * x, 4 * y}; }

    GridPoint operator+(GridPoint o) const { return {qx + o.qx, qy + o.qy}; }
    GridPoint operator-(GridPoint o) const { return {qx - o.qx, qy - o.qy}; }
    GridPoint operator-() const { return {-qx, -qy}; }
    bool operator==(GridPoint o) const { return qx == o.qx && qy == o.qy; }
    auto operator<=>(const GridPoint&) const = default;

    GridPoint rot90() const { return {-qy, qx}; }   // multiplication by i
    GridPoint conj() const { return {qx, -qy}; }

    // Manhattan norm in quarter units: 4*||u||_1.
    int norm1_quarters() const { return std::abs(qx) + std::abs(qy); }
    double abs() const { return std::hypot(qx / 4.0, qy / 4.0); }
    std::complex<double> to_complex() const { return {qx / 4.0, qy / 4.0}; }
    ExactScalar to_exact() const {
        return ExactScalar(Rational(qx, 4)) + ExactScalar::i() * ExactScalar(Rational(qy, 4));
    }
};

enum class PointClass { primal, dual, medial_h, medial_v, corner, other };

PointClass classify(GridPoint p);

inline bool is_primal(GridPoint p) { return classify(p) == PointClass::primal; }
inline bool is_dual(GridPoint p) { return classify(p) == PointClass::dual; }
inline bool is_medial(GridPoint p) {
    auto c = classify(p);
    return c == PointClass::medial_h || c == PointClass::medial_v;
}
inline bool is_diamond(GridPoint p) { return is_primal(p) || is_dual(p); }
inline bool is_corner(GridPoint p) { return classify(p) == PointClass::corner; }

/// The sign function on diamond and medial vertices: +1 on primal vertices
/// and horizontal edge midpoints, -1 on dual vertices and vertical edges.
int epsilon_sign(GridPoint p);

struct GridPointHash {
    size_t operator()(GridPoint p) const {
        return std::hash<int64_t>()((int64_t(p.qx) << 32) ^ uint32_t(p.qy));
    }
};

// Unit half-steps in quarter units.
inline constexpr GridPoint kHalfRight{2, 0}, kHalfUp{0, 2}, kHalfLeft{-2, 0}, kHalfDown{0, -2};
inline constexpr GridPoint kStepRight{4, 0}, kStepUp{0, 4}, kStepLeft{-4, 0}, kStepDown{0, -4};

enum class Validity { diamond, medial, diamond_and_medial, primal };

/// A function on (a patch of) the diamond and/or medial sublattices with
/// ExactScalar values. Evaluations go through a memo table; finite-support
/// functions return 0 outside their table.
class LatticeFunction {
public:
    LatticeFunction() = default;
    LatticeFunction(std::function<ExactScalar(GridPoint)> eval, Validity v)
        : eval_(std::move(eval)), validity_(v) {}

    static LatticeFunction finite_support(std::unordered_map<GridPoint, ExactScalar, GridPointHash> table,
                                          Validity v);
    static LatticeFunction constant(const ExactScalar& c, Validity v = Validity::diamond_and_medial);

    const ExactScalar& operator()(GridPoint p) const;
    Validity validity() const { return validity_; }

private:
    std::function<ExactScalar(GridPoint)> eval_;
    Validity validity_ = Validity::diamond_and_medial;
    bool finite_support_ = false;
    mutable std::unordered_map<GridPoint, ExactScalar, GridPointHash> memo_;
};

// Discrete Wirtinger derivatives on the diamond/medial lattices:
//   dee f(z)    = [f(z+1/2)-f(z-1/2)]/2 - (i/2) [f(z+i/2)-f(z-i/2)]
//   deebar f(z) = [f(z+1/2)-f(z-1/2)]/2 + (i/2) [f(z+i/2)-f(z-i/2)]
ExactScalar dee(const LatticeFunction& f, GridPoint z);
ExactScalar deebar(const LatticeFunction& f, GridPoint z);

// Primal-lattice derivatives evaluated at an edge midpoint z: the plain
// difference of the two primal endpoints on horizontal edges and
// -/+ i times the vertical difference on vertical edges.
ExactScalar dee_bullet(const LatticeFunction& f, GridPoint z);
ExactScalar deebar_bullet(const LatticeFunction& f, GridPoint z);

/// Combinatorial Laplacian: sum of the four unit-step neighbors minus 4 f(z).
ExactScalar laplacian(const LatticeFunction& f, GridPoint z);

/// A closed self-avoiding path on the corner lattice with steps of length
/// 1/2. Positively oriented contours run counterclockwise.
class CornerContour {
public:
    explicit CornerContour(std::vector<GridPoint> corners);

    /// Axis-aligned rectangle with corner-lattice corners (qx0,qy0)..(qx1,qy1)
    /// (quarter units, all odd), positively oriented.
    static CornerContour rectangle(int qx0, int qy0, int qx1, int qy1);

    /// Square contour around the origin whose interior contains all diamond
    /// and medial points with ||u||_1 <= radius_quarters/4.
    static CornerContour around_origin(int radius_quarters);

    size_t steps() const { return corners_.size() - 1; }
    // Step j (1-based like the path) as (medial point, diamond point, step).
    struct Step {
        GridPoint medial, diamond, delta;  // delta in quarter units, |delta| = 2
    };
    Step step(size_t j) const;

    const std::vector<GridPoint>& corners() const { return corners_; }

    bool contains(GridPoint p) const;  // p diamond or medial, not on the contour
    std::vector<GridPoint> interior_diamond() const;
    std::vector<GridPoint> interior_medial() const;
    std::vector<GridPoint> interior_primal() const;

private:
    std::vector<GridPoint> corners_;  // corners_[0] == corners_.back()
    int qx_min_, qx_max_, qy_min_, qy_max_;
    std::vector<GridPoint> interior_of_class(bool medial, bool primal_only) const;
};

/// Discrete contour integral  sum_j (c_j - c_{j-1})^(conj) f(u_diamond) g(u_medial).
ExactScalar contour_integral(const CornerContour& gamma, const LatticeFunction& f,
                             const LatticeFunction& g, bool conjugate_steps = false);

}  // namespace dgff
