#include "dgff/monomials.hpp"

#include <cassert>
#include <cmath>
#include <complex>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace dgff {

namespace {

constexpr GridPoint kAnchors[4] = {{0, 0}, {2, 2}, {2, 0}, {0, 2}};

int coset_of(GridPoint p) {
    // 0 primal, 1 dual, 2 medial_h, 3 medial_v
    switch (classify(p)) {
        case PointClass::primal: return 0;
        case PointClass::dual: return 1;
        case PointClass::medial_h: return 2;
        case PointClass::medial_v: return 3;
        default: throw std::invalid_argument("monomials: not a half-grid point");
    }
}

ExactScalar i_pow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return ExactScalar(1);
        case 1: return ExactScalar::i();
        case 2: return ExactScalar(-1);
        default: return -ExactScalar::i();
    }
}

const ExactScalar kHalf{Rational(1, 2)};
const ExactScalar kHalfI{Gaussian(Rational(0), Rational(1, 2))};

// deebar u^[-1]: pi at the origin, pi/2 at the four edge midpoints,
// pi/4 at the four plaquette centers around the origin.
std::vector<std::pair<GridPoint, ExactScalar>> neg_one_source() {
    std::vector<std::pair<GridPoint, ExactScalar>> g;
    g.emplace_back(GridPoint{0, 0}, ExactScalar::pi());
    for (GridPoint p : {GridPoint{2, 0}, {-2, 0}, {0, 2}, {0, -2}})
        g.emplace_back(p, ExactScalar::pi_pow(1, Gaussian(Rational(1, 2))));
    for (GridPoint p : {GridPoint{2, 2}, {-2, 2}, {2, -2}, {-2, -2}})
        g.emplace_back(p, ExactScalar::pi_pow(1, Gaussian(Rational(1, 4))));
    return g;
}

}  // namespace

MonomialFamily& monomials() {
    static MonomialFamily family;
    return family;
}

void MonomialFamily::ensure(int n, int quarter_radius) {
    if (std::abs(n) > order_bound_ + 1)
        throw std::out_of_range("monomial order exceeds configured bound");
    auto& entry = tables_[n];
    if (entry.quarter_radius >= quarter_radius) return;
    int qr = std::max(quarter_radius, 16);
    Table fresh;
    if (n == 0) {
        for (int x = -qr; x <= qr; x += 2)
            for (int y = -qr; y <= qr; y += 2) fresh.values[{x, y}] = ExactScalar(1);
    } else if (n == -1) {
        build_negative_one(fresh, qr);
    } else if (n < 0) {
        build_negative(-n, fresh, qr);
    } else {
        build_positive(n, fresh, qr);
    }
    fresh.quarter_radius = qr;
    entry = std::move(fresh);
}

const ExactScalar& MonomialFamily::value(int n, GridPoint p) {
    if (std::abs(n) > order_bound_)
        throw std::out_of_range("monomial order exceeds configured bound");
    ensure(n, std::max(std::abs(p.qx), std::abs(p.qy)));
    const auto& t = tables_.at(n);
    auto it = t.values.find(p);
    if (it == t.values.end()) throw std::invalid_argument("monomial: not a half-grid point");
    return it->second;
}

LatticeFunction MonomialFamily::as_function(int n, int radius_units) {
    ensure(n, 4 * radius_units);
    return LatticeFunction([this, n](GridPoint p) { return value(n, p); },
                           Validity::diamond_and_medial);
}

ExactScalar MonomialFamily::deebar_value(int n, GridPoint p) {
    ensure(n, std::max(std::abs(p.qx), std::abs(p.qy)) + 2);
    const auto& t = tables_.at(n).values;
    auto v = [&](GridPoint q) { return t.at(q); };
    return kHalf * (v(p + kHalfRight) - v(p + kHalfLeft)) +
           kHalfI * (v(p + kHalfUp) - v(p + kHalfDown));
}

void MonomialFamily::build_negative_one(Table& t, int qr) {
    auto src = neg_one_source();
    auto& G = potential_kernel();
    // h = -4 (G * g), convolved within each coset of the half-integer grid
    std::unordered_map<GridPoint, ExactScalar, GridPointHash> h;
    int hr = qr + 2;
    for (int x = -hr; x <= hr; x += 2)
        for (int y = -hr; y <= hr; y += 2) {
            GridPoint z{x, y};
            ExactScalar acc;
            for (const auto& [w, gw] : src) {
                GridPoint d = z - w;
                if ((d.qx % 4) || (d.qy % 4)) continue;  // different coset
                acc += G.at(d.qx / 4, d.qy / 4) * gw;
            }
            h[z] = ExactScalar(-4) * acc;
        }
    for (int x = -qr; x <= qr; x += 2)
        for (int y = -qr; y <= qr; y += 2) {
            GridPoint z{x, y};
            t.values[z] = kHalf * (h.at(z + kHalfRight) - h.at(z + kHalfLeft)) -
                          kHalfI * (h.at(z + kHalfUp) - h.at(z + kHalfDown));
        }
}

void MonomialFamily::build_negative(int k, Table& t, int qr) {
    ensure(-(k - 1), qr + 2);
    const auto& prev = tables_.at(-(k - 1)).values;
    auto v = [&](GridPoint q) { return prev.at(q); };
    ExactScalar factor{Rational(-1, k - 1)};  // dee u^[-(k-1)] = -(k-1) u^[-k]
    for (int x = -qr; x <= qr; x += 2)
        for (int y = -qr; y <= qr; y += 2) {
            GridPoint z{x, y};
            ExactScalar d = kHalf * (v(z + kHalfRight) - v(z + kHalfLeft)) -
                            kHalfI * (v(z + kHalfUp) - v(z + kHalfDown));
            t.values[z] = factor * d;
        }
}

void MonomialFamily::build_positive(int n, Table& t, int qr) {
    // For the residue pinning of even orders we need the contour and the
    // poles of u^[-n-1] inside the built box.
    int contour_d = 2 * (n + 3) + 1;
    if (n % 2 == 0) qr = std::max(qr, contour_d + 3);
    ensure(n - 1, qr);
    const auto& prev = tables_.at(n - 1).values;
    ExactScalar nn(n);

    // Path-integrate the increment system per coset from the four anchors.
    auto& f = t.values;
    for (GridPoint a : kAnchors) f[a] = ExactScalar(0);
    std::queue<GridPoint> bfs;
    for (GridPoint a : kAnchors) bfs.push(a);
    auto in_box = [&](GridPoint p) {
        return std::abs(p.qx) <= qr && std::abs(p.qy) <= qr;
    };
    while (!bfs.empty()) {
        GridPoint p = bfs.front();
        bfs.pop();
        const ExactScalar fp = f.at(p);
        for (GridPoint step : {kStepRight, kStepLeft, kStepUp, kStepDown}) {
            GridPoint q = p + step;
            if (!in_box(q) || f.count(q)) continue;
            GridPoint mid{(p.qx + q.qx) / 2, (p.qy + q.qy) / 2};
            ExactScalar inc = nn * prev.at(mid);  // horizontal increment
            if (step.qy != 0) inc = ExactScalar::i() * inc;
            if (step.qx < 0 || step.qy < 0)
                f[q] = fp - inc;
            else
                f[q] = fp + inc;
            bfs.push(q);
        }
    }

    // Fix the four coset constants from the square-grid symmetries.
    // Rotation: c_{rho(k)} = i^n c_k + d_k with d_k = i^n f(u) - f(iu).
    ExactScalar in_pow = i_pow(n);
    ExactScalar d[4];
    bool d_set[4] = {false, false, false, false};
    for (const auto& [p, fp] : f) {
        GridPoint ip = p.rot90();
        if (!f.count(ip)) continue;
        int k = coset_of(p);
        ExactScalar dk = in_pow * fp - f.at(ip);
        if (!d_set[k]) {
            d[k] = dk;
            d_set[k] = true;
        } else if (!(d[k] == dk)) {
            throw std::logic_error("monomials: inconsistent rotation data");
        }
    }
    ExactScalar c[4];
    ExactScalar pin_dir_h, pin_dir_v;  // leftover direction for even n
    bool pinned_needed = false;
    if (n % 2 == 1) {
        // 1 - i^n invertible; medial 2x2 system has determinant 2.
        ExactScalar one(1);
        c[0] = d[0] * (one - in_pow).inverse_monomial();
        c[1] = d[1] * (one - in_pow).inverse_monomial();
        c[2] = (in_pow * d[2] + d[3]) * ExactScalar(Rational(1, 2));
        c[3] = in_pow * c[2] + d[2];
    } else if (n % 4 == 2) {
        c[0] = d[0] * ExactScalar(Rational(1, 2));
        c[1] = d[1] * ExactScalar(Rational(1, 2));
        if (!(d[2] == d[3])) throw std::logic_error("monomials: medial rotation mismatch");
        c[2] = d[2] * ExactScalar(Rational(1, 2));
        c[3] = c[2];
        pin_dir_h = ExactScalar(1);
        pin_dir_v = ExactScalar(-1);
        pinned_needed = true;
    } else {  // n % 4 == 0
        if (!d[0].is_zero() || !d[1].is_zero())
            throw std::logic_error("monomials: degenerate rotation data nonzero");
        if (!(d[2] == -d[3])) throw std::logic_error("monomials: medial rotation mismatch");
        c[0] = ExactScalar(0);  // u^[n](0) = 0
        c[1] = ExactScalar(0);  // u^[n] = 0 at the four plaquette centers
        c[2] = ExactScalar(0);
        c[3] = d[2];
        pin_dir_h = ExactScalar(1);
        pin_dir_v = ExactScalar(1);
        pinned_needed = true;
    }
    for (auto& [p, fp] : f) fp += c[coset_of(p)];

    // Conjugation symmetry must now hold up to the leftover real direction.
    for (const auto& [p, fp] : f) {
        GridPoint cp = p.conj();
        if (!f.count(cp)) continue;
        if (!(f.at(cp) == fp.conj()))
            throw std::logic_error("monomials: conjugation symmetry violated");
        break;  // full check is done by validate(); one witness here
    }

    if (!pinned_needed) return;

    // Pin the remaining medial degree of freedom with the residue identity
    //   (1/2pi i) oint u^[-n-1]_diamond u^[n]_medial du = 1.
    ensure(-n - 1, contour_d + 3);
    const auto& dual_table = tables_.at(-n - 1).values;
    CornerContour gamma = CornerContour::rectangle(-contour_d, -contour_d, contour_d, contour_d);
    ExactScalar inv_2pii = ExactScalar::pi_pow(-1, Gaussian(Rational(0), Rational(-1, 2)));
    ExactScalar base, coef;
    for (size_t j = 1; j <= gamma.steps(); ++j) {
        auto s = gamma.step(j);
        ExactScalar step(Gaussian(Rational(s.delta.qx, 4), Rational(s.delta.qy, 4)));
        ExactScalar lhs = step * dual_table.at(s.diamond);
        base += lhs * f.at(s.medial);
        coef += lhs * (classify(s.medial) == PointClass::medial_h ? pin_dir_h : pin_dir_v);
    }
    base = inv_2pii * base;
    coef = inv_2pii * coef;
    ExactScalar target = ExactScalar(1) - base;
    ExactScalar t_pin;
    if (coef.is_zero()) {
        if (!target.is_zero())
            throw std::logic_error("monomials: residue identity unreachable");
    } else {
        // t solves t * coef == target with t a plain real rational; read it
        // off one term of coef and verify the full equality.
        const auto& [kk, gg] = *coef.terms().begin();
        auto it = target.terms().find(kk);
        Gaussian tg = (it == target.terms().end()) ? Gaussian() : it->second;
        t_pin = ExactScalar(tg * gg.inverse());
        if (!(t_pin * coef == target))
            throw std::logic_error("monomials: residue pinning not solvable");
        if (!(t_pin == t_pin.conj()))
            throw std::logic_error("monomials: residue pinning not real");
    }
    for (auto& [p, fp] : f) {
        PointClass pc = classify(p);
        if (pc == PointClass::medial_h)
            fp += t_pin * pin_dir_h;
        else if (pc == PointClass::medial_v)
            fp += t_pin * pin_dir_v;
    }
}

std::set<GridPoint> MonomialFamily::pole_set(int k) {
    if (k <= 0) throw std::invalid_argument("pole_set: k must be positive");
    int qr = 2 * (k + 2) + 4;
    ensure(-k, qr + 2);
    std::set<GridPoint> out;
    for (int x = -qr; x <= qr; x += 2)
        for (int y = -qr; y <= qr; y += 2)
            if (!deebar_value(-k, {x, y}).is_zero()) out.insert({x, y});
    return out;
}

std::set<GridPoint> MonomialFamily::pole_set_medial(int k) {
    std::set<GridPoint> out;
    for (GridPoint p : pole_set(k))
        if (is_medial(p)) out.insert(p);
    return out;
}

ExactScalar MonomialFamily::residue_pairing(int n, int m) {
    int reach = std::max({std::abs(n), std::abs(m)}) + 3;
    int d = 2 * reach + 1;
    ensure(n, d + 3);
    ensure(m, d + 3);
    const auto& fn = tables_.at(n).values;
    const auto& fm = tables_.at(m).values;
    CornerContour gamma = CornerContour::rectangle(-d, -d, d, d);
    ExactScalar acc;
    for (size_t j = 1; j <= gamma.steps(); ++j) {
        auto s = gamma.step(j);
        ExactScalar step(Gaussian(Rational(s.delta.qx, 4), Rational(s.delta.qy, 4)));
        acc += step * fn.at(s.diamond) * fm.at(s.medial);
    }
    return ExactScalar::pi_pow(-1, Gaussian(Rational(0), Rational(-1, 2))) * acc;
}

MonomialFamily::Report MonomialFamily::validate(int n, int radius_units) {
    Report rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    int qr = 4 * radius_units;
    ensure(n, qr + 4);
    if (n != 0) ensure(n - 1, qr + 4);

    for (int x = -qr; x <= qr; x += 2)
        for (int y = -qr; y <= qr; y += 2) {
            GridPoint p{x, y};
            const ExactScalar& v = value(n, p);
            // property 1: square-grid symmetries
            if (!(value(n, p.rot90()) == i_pow(n) * v)) fail("rotation symmetry fails");
            if (!(value(n, p.conj()) == v.conj())) fail("conjugation symmetry fails");
            // property 2
            if (n == 0) {
                if (!(v == ExactScalar(1))) fail("u^[0] != 1");
            } else {
                ExactScalar dv = kHalf * (value(n, p + kHalfRight) - value(n, p + kHalfLeft)) -
                                 kHalfI * (value(n, p + kHalfUp) - value(n, p + kHalfDown));
                if (!(dv == ExactScalar(n) * value(n - 1, p))) fail("dee u^[n] != n u^[n-1]");
            }
            // properties 5/6
            ExactScalar db = deebar_value(n, p);
            if (n >= 0) {
                if (!db.is_zero()) fail("deebar u^[n] != 0 for n >= 0");
            } else if (p.norm1_quarters() > 2 * (-n + 1)) {
                if (!db.is_zero()) fail("pole outside B((k+1)/2)");
            }
        }
    if (n == -1) {
        auto src = neg_one_source();
        for (const auto& [w, gw] : src)
            if (!(deebar_value(-1, w) == gw)) fail("property 5 value mismatch");
    }
    if (n < 0) {
        for (GridPoint p : pole_set_medial(-n))
            if (p.norm1_quarters() > 4 * (((-n) / 2)) + 2) fail("medial pole outside bound");
    }
    // property 7: residue against the complementary order
    if (std::abs(-n - 1) <= order_bound_ + 1) {
        ExactScalar r = residue_pairing(n, -n - 1);
        if (!(r == ExactScalar(1))) fail("residue pairing != 1");
    }
    // property 8: float asymptotics along a ray
    for (int R : {10, 20, 40}) {
        ensure(n, 4 * R + 8);
        GridPoint p = GridPoint::primal(R, 0);
        std::complex<double> exact = value(n, p).to_float();
        std::complex<double> target = std::pow(std::complex<double>(R, 0.0), n);
        double rel = std::abs(exact - target) / std::abs(target);
        std::ostringstream os;
        os << "asymptotics at |u|=" << R << ": rel err " << rel;
        rep.notes.push_back(os.str());
    }
    return rep;
}

}  // namespace dgff
