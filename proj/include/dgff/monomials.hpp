#pragma once

#include <set>
#include <string>
#include <vector>

#include "dgff/exact.hpp"
#include "dgff/greens.hpp"
#include "dgff/grid.hpp"

namespace dgff {

/// The discrete Laurent monomials u^[n] on the diamond and medial lattices:
/// u^[0] = 1, dee u^[n] = n u^[n-1], discrete holomorphic for n >= 0 and
/// off a finite pole set for n < 0, normalized by the square-grid symmetries,
/// the prescribed failure of holomorphicity of u^[-1] near the origin, and
/// the discrete residue formula.
///
/// Construction: u^[-1] solves deebar f = g with g the prescribed local data,
/// via f = dee h, h = -4 (G * g) with G the exact lattice Green's function
/// acting per coset of the half-integer grid; u^[-k] by repeated dee.
/// Positive orders are path-integrated from the increment system and anchored
/// by the symmetries; for even orders the one remaining medial degree of
/// freedom is pinned by the residue identity against u^[-n-1].
class MonomialFamily {
public:
    explicit MonomialFamily(int order_bound = 12) : order_bound_(order_bound) {}

    int order_bound() const { return order_bound_; }

    /// Value of u^[n] at a diamond or medial point.
    const ExactScalar& value(int n, GridPoint p);

    /// Read-only view as a LatticeFunction (valid within the built radius).
    LatticeFunction as_function(int n, int radius_units);

    /// deebar u^[n] at p.
    ExactScalar deebar_value(int n, GridPoint p);

    /// Exact pole set of u^[-k] (points where deebar u^[-k] != 0), k > 0.
    std::set<GridPoint> pole_set(int k);
    /// Medial part of the pole set.
    std::set<GridPoint> pole_set_medial(int k);

    /// (1/2pi i) contour integral of u^[n]_diamond u^[m]_medial du over a
    /// rectangle containing both pole sets.
    ExactScalar residue_pairing(int n, int m);

    struct Report {
        bool ok = true;
        std::vector<std::string> violations;
        std::vector<std::string> notes;  // float asymptotics etc.
    };
    /// Exact checks of properties 1, 2, 5, 6, 7 within the radius and a
    /// float check of the asymptotics u^[n] = u^n + o(|u|^n).
    Report validate(int n, int radius_units);

private:
    struct Table {
        int quarter_radius = -1;  // values known for max(|qx|,|qy|) <= this
        std::unordered_map<GridPoint, ExactScalar, GridPointHash> values;
    };

    int order_bound_;
    std::map<int, Table> tables_;

    void ensure(int n, int quarter_radius);
    void build_negative_one(Table& t, int qr);
    void build_negative(int k, Table& t, int qr);  // k >= 2
    void build_positive(int n, Table& t, int qr);
    ExactScalar contour_residue(int n_diamond, const Table& medial_table, int m_for_poles);
};

MonomialFamily& monomials();  // shared process-wide family

}  // namespace dgff
