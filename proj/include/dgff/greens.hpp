#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dgff/exact.hpp"
#include "dgff/grid.hpp"

namespace dgff {

/// Exact infinite-lattice Green's function G on Z^2:
///   laplacian G = -delta_0,  G(0) = 0,  G(u) = -(1/2pi) log|u| + C + O(|u|^-2).
/// Values are of the form a + b/pi with a, b rational. Built by the
/// axis/diagonal recurrence seeded from G(1,0) = -1/4 and the diagonal
/// closed form G(n,n) = -(1/pi) sum_{j<=n} 1/(2j-1).
class PotentialKernel {
public:
    /// G at the primal lattice point (x, y), lattice units.
    const ExactScalar& at(int x, int y);
    /// G at a primal GridPoint (quarter units divisible by 4).
    const ExactScalar& at_point(GridPoint u);

    /// G(u-v) - G(u) - G(v), the gradient Green's function.
    ExactScalar grad_green(GridPoint u, GridPoint v);

    /// Independent numerical evaluation through the 1D reduction of the
    /// Fourier integral; used to validate every exact value.
    static double fourier_oracle(int x, int y);

    int bound() const { return bound_; }

private:
    void ensure(int bound);
    int bound_ = 0;
    std::vector<std::vector<ExactScalar>> table_;  // table_[x][y], 0 <= y <= x
};

PotentialKernel& potential_kernel();  // shared process-wide kernel

enum class BC { dirichlet, neumann };

/// A finite discrete domain: vertex set with boundary, Dirichlet/Neumann
/// Laplacians and cached Green solvers. Vertices are stored unit-scaled;
/// the mesh enters only through delta() in the scaling module.
class DiscreteDomain {
public:
    struct Vertex {
        int x = 0, y = 0;
        auto operator<=>(const Vertex&) const = default;
    };

    /// [0,1]^2 at delta = 1/mesh_n: vertices {0..n}^2.
    static DiscreteDomain square(int mesh_n);
    /// Unit-disk approximation at delta = 1/mesh_n.
    static DiscreteDomain disk(int mesh_n);
    /// The ball domain Lambda(r): interior {||u||_1 < r}, distinguished
    /// boundary circle C(r) = {||u||_1 = r} plus the outer staircase corners.
    static DiscreteDomain ball(int r);

    int mesh_n() const { return mesh_n_; }
    double delta() const { return 1.0 / mesh_n_; }
    size_t size() const { return verts_.size(); }
    size_t interior_size() const { return n_interior_; }
    bool exact_mode() const { return n_interior_ <= 200; }

    const std::vector<Vertex>& vertices() const { return verts_; }
    bool contains(Vertex v) const { return index_of(v) >= 0; }
    bool is_interior(Vertex v) const {
        int i = index_of(v);
        return i >= 0 && size_t(i) < n_interior_;
    }
    bool is_boundary(Vertex v) const {
        int i = index_of(v);
        return i >= 0 && size_t(i) >= n_interior_;
    }
    /// Interior connectivity check (used by the disk constructor tests).
    bool interior_connected() const;

    double green(BC bc, Vertex z, Vertex w) const;
    /// Exact rational Green value; requires exact_mode().
    Rational green_exact(BC bc, Vertex z, Vertex w) const;

    /// Neumann Green with a custom boundary mass (default: uniform).
    double neumann_green_with_mass(const std::map<Vertex, double>& mass, Vertex z,
                                   Vertex w) const;

    /// Harmonic measure H_b(v) = (Neumann Laplacian of Dirichlet Green)(b, v)
    /// for b in C(r), v interior; exact. Only for ball domains.
    Rational harmonic_measure(Vertex b, Vertex v) const;
    std::vector<Vertex> circle() const;  // C(r) for ball domains

private:
    DiscreteDomain() = default;
    void finalize(std::vector<Vertex> interior, std::vector<Vertex> boundary);
    int index_of(Vertex v) const;
    int degree(Vertex v) const;

    int mesh_n_ = 1;
    int ball_r_ = 0;  // nonzero for ball domains
    std::vector<Vertex> verts_;  // interior first, then boundary
    size_t n_interior_ = 0;
    std::map<Vertex, int> index_;

    struct Solvers;
    std::shared_ptr<Solvers> solvers_;  // lazily built caches
};

}  // namespace dgff
