#include "dgff/grid.hpp"

#include <stdexcept>

namespace dgff {

namespace {
int mod4(int v) { return ((v % 4) + 4) % 4; }

ExactScalar half(long num_i_or_one, bool imaginary) {
    // num/2 or (num/2) i
    Gaussian g = imaginary ? Gaussian(Rational(0), Rational(num_i_or_one, 2))
                           : Gaussian(Rational(num_i_or_one, 2));
    return ExactScalar(g);
}
}  // namespace

PointClass classify(GridPoint p) {
    int x = mod4(p.qx), y = mod4(p.qy);
    if (x == 0 && y == 0) return PointClass::primal;
    if (x == 2 && y == 2) return PointClass::dual;
    if (x == 2 && y == 0) return PointClass::medial_h;
    if (x == 0 && y == 2) return PointClass::medial_v;
    if (x % 2 == 1 && y % 2 == 1) return PointClass::corner;
    return PointClass::other;
}

int epsilon_sign(GridPoint p) {
    switch (classify(p)) {
        case PointClass::primal:
        case PointClass::medial_h:
            return 1;
        case PointClass::dual:
        case PointClass::medial_v:
            return -1;
        default:
            throw std::invalid_argument("epsilon_sign: not a diamond/medial point");
    }
}

LatticeFunction LatticeFunction::finite_support(
    std::unordered_map<GridPoint, ExactScalar, GridPointHash> table, Validity v) {
    LatticeFunction f;
    f.validity_ = v;
    f.finite_support_ = true;
    f.memo_ = std::move(table);
    return f;
}

LatticeFunction LatticeFunction::constant(const ExactScalar& c, Validity v) {
    return LatticeFunction([c](GridPoint) { return c; }, v);
}

const ExactScalar& LatticeFunction::operator()(GridPoint p) const {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    if (finite_support_) {
        static const ExactScalar kZero;
        return kZero;
    }
    if (!eval_) throw std::logic_error("LatticeFunction: empty");
    return memo_.emplace(p, eval_(p)).first->second;
}

ExactScalar dee(const LatticeFunction& f, GridPoint z) {
    return half(1, false) * (f(z + kHalfRight) - f(z + kHalfLeft)) -
           half(1, true) * (f(z + kHalfUp) - f(z + kHalfDown));
}

ExactScalar deebar(const LatticeFunction& f, GridPoint z) {
    return half(1, false) * (f(z + kHalfRight) - f(z + kHalfLeft)) +
           half(1, true) * (f(z + kHalfUp) - f(z + kHalfDown));
}

ExactScalar dee_bullet(const LatticeFunction& f, GridPoint z) {
    switch (classify(z)) {
        case PointClass::medial_h:
            return f(z + kHalfRight) - f(z + kHalfLeft);
        case PointClass::medial_v:
            return -ExactScalar::i() * (f(z + kHalfUp) - f(z + kHalfDown));
        default:
            throw std::invalid_argument("dee_bullet: not a medial point");
    }
}

ExactScalar deebar_bullet(const LatticeFunction& f, GridPoint z) {
    switch (classify(z)) {
        case PointClass::medial_h:
            return f(z + kHalfRight) - f(z + kHalfLeft);
        case PointClass::medial_v:
            return ExactScalar::i() * (f(z + kHalfUp) - f(z + kHalfDown));
        default:
            throw std::invalid_argument("deebar_bullet: not a medial point");
    }
}

ExactScalar laplacian(const LatticeFunction& f, GridPoint z) {
    return f(z + kStepRight) + f(z + kStepUp) + f(z + kStepLeft) + f(z + kStepDown) -
           ExactScalar(4) * f(z);
}

CornerContour::CornerContour(std::vector<GridPoint> corners) : corners_(std::move(corners)) {
    if (corners_.size() < 5 || !(corners_.front() == corners_.back()))
        throw std::invalid_argument("CornerContour: not a closed path");
    qx_min_ = qx_max_ = corners_[0].qx;
    qy_min_ = qy_max_ = corners_[0].qy;
    for (size_t j = 0; j < corners_.size(); ++j) {
        const GridPoint& c = corners_[j];
        if (!is_corner(c)) throw std::invalid_argument("CornerContour: vertex not a corner");
        if (j > 0) {
            GridPoint d = c - corners_[j - 1];
            if (std::abs(d.qx) + std::abs(d.qy) != 2 || (d.qx != 0 && d.qy != 0))
                throw std::invalid_argument("CornerContour: step not of length 1/2");
        }
        qx_min_ = std::min(qx_min_, c.qx);
        qx_max_ = std::max(qx_max_, c.qx);
        qy_min_ = std::min(qy_min_, c.qy);
        qy_max_ = std::max(qy_max_, c.qy);
    }
    std::set<GridPoint> seen(corners_.begin() + 1, corners_.end());
    if (seen.size() != corners_.size() - 1)
        throw std::invalid_argument("CornerContour: self-intersecting path");
}

CornerContour CornerContour::rectangle(int qx0, int qy0, int qx1, int qy1) {
    if (qx0 >= qx1 || qy0 >= qy1) throw std::invalid_argument("rectangle: empty");
    std::vector<GridPoint> cs;
    for (int x = qx0; x < qx1; x += 2) cs.push_back({x, qy0});
    for (int y = qy0; y < qy1; y += 2) cs.push_back({qx1, y});
    for (int x = qx1; x > qx0; x -= 2) cs.push_back({x, qy1});
    for (int y = qy1; y > qy0; y -= 2) cs.push_back({qx0, y});
    cs.push_back({qx0, qy0});
    return CornerContour(std::move(cs));
}

CornerContour CornerContour::around_origin(int radius_quarters) {
    int d = radius_quarters + 1;
    if (d % 2 == 0) ++d;
    return rectangle(-d, -d, d, d);
}

CornerContour::Step CornerContour::step(size_t j) const {
    GridPoint a = corners_[j - 1], b = corners_[j];
    GridPoint d = b - a;
    GridPoint mid2{a.qx + b.qx, a.qy + b.qy};  // 2*(midpoint), in quarter units
    // The two lattice points adjacent to both corners sit perpendicular to
    // the step at distance 1/4 from its midpoint.
    GridPoint perp{-d.qy / 2, d.qx / 2};
    GridPoint p1{(mid2.qx + perp.qx) / 2, (mid2.qy + perp.qy) / 2};
    GridPoint p2{(mid2.qx - perp.qx) / 2, (mid2.qy - perp.qy) / 2};
    Step s;
    s.delta = d;
    if (is_medial(p1)) {
        s.medial = p1;
        s.diamond = p2;
    } else {
        s.medial = p2;
        s.diamond = p1;
    }
    return s;
}

bool CornerContour::contains(GridPoint p) const {
    // Crossing count of the horizontal ray to the right of p. Contour
    // y-coordinates are odd, p's are even (diamond/medial), so crossings
    // are never degenerate.
    int crossings = 0;
    for (size_t j = 1; j < corners_.size(); ++j) {
        GridPoint a = corners_[j - 1], b = corners_[j];
        if (a.qx != b.qx) continue;  // horizontal step, ignore
        if (a.qx <= p.qx) continue;
        int ylo = std::min(a.qy, b.qy), yhi = std::max(a.qy, b.qy);
        if (ylo < p.qy && p.qy < yhi) ++crossings;
    }
    return crossings % 2 == 1;
}

std::vector<GridPoint> CornerContour::interior_of_class(bool medial, bool primal_only) const {
    std::vector<GridPoint> out;
    for (int x = qx_min_ + 1; x < qx_max_; ++x) {
        if (x % 2 != 0) continue;
        for (int y = qy_min_ + 1; y < qy_max_; ++y) {
            if (y % 2 != 0) continue;
            GridPoint p{x, y};
            PointClass c = classify(p);
            bool take = medial ? (c == PointClass::medial_h || c == PointClass::medial_v)
                               : (primal_only ? c == PointClass::primal
                                              : (c == PointClass::primal || c == PointClass::dual));
            if (take && contains(p)) out.push_back(p);
        }
    }
    return out;
}

std::vector<GridPoint> CornerContour::interior_diamond() const {
    return interior_of_class(false, false);
}
std::vector<GridPoint> CornerContour::interior_medial() const {
    return interior_of_class(true, false);
}
std::vector<GridPoint> CornerContour::interior_primal() const {
    return interior_of_class(false, true);
}

ExactScalar contour_integral(const CornerContour& gamma, const LatticeFunction& f,
                             const LatticeFunction& g, bool conjugate_steps) {
    ExactScalar acc;
    for (size_t j = 1; j <= gamma.steps(); ++j) {
        auto s = gamma.step(j);
        Rational dx(s.delta.qx, 4), dy(s.delta.qy, 4);
        ExactScalar step(Gaussian(dx, conjugate_steps ? -dy : dy));
        acc += step * f(s.diamond) * g(s.medial);
    }
    return acc;
}

}  // namespace dgff
