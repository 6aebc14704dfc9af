#include "dgff/greens.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

namespace dgff {

namespace {
const ExactScalar kZeroScalar;

ExactScalar diag_value(int n) {
    // G(n,n) = -(1/pi) * (1 + 1/3 + ... + 1/(2n-1))
    Rational h(0);
    for (int j = 1; j <= n; ++j) h += Rational(1, 2 * j - 1);
    return ExactScalar::pi_pow(-1, Gaussian(-h));
}
}  // namespace

void PotentialKernel::ensure(int bound) {
    if (bound <= bound_ && !table_.empty()) return;
    bound = std::max(bound, 8);
    int n = bound + 1;
    table_.assign(n + 1, {});
    for (int x = 0; x <= n; ++x) table_[x].assign(x + 1, ExactScalar());
    table_[0][0] = ExactScalar(0);
    table_[1][0] = ExactScalar(Rational(-1, 4));
    table_[1][1] = diag_value(1);
    for (int x = 1; x < n; ++x) {
        table_[x + 1][x + 1] = diag_value(x + 1);
        // harmonicity at (x,x):  2 G(x+1,x) + 2 G(x,x-1) = 4 G(x,x)
        table_[x + 1][x] = ExactScalar(2) * table_[x][x] - table_[x][x - 1];
        for (int y = x - 1; y >= 1; --y)
            table_[x + 1][y] = ExactScalar(4) * table_[x][y] - table_[x - 1][y] -
                               table_[x][y + 1] - table_[x][y - 1];
        table_[x + 1][0] =
            ExactScalar(4) * table_[x][0] - table_[x - 1][0] - ExactScalar(2) * table_[x][1];
    }
    bound_ = n - 1;
}

const ExactScalar& PotentialKernel::at(int x, int y) {
    x = std::abs(x);
    y = std::abs(y);
    if (y > x) std::swap(x, y);
    ensure(x);
    return table_[x][y];
}

const ExactScalar& PotentialKernel::at_point(GridPoint u) {
    if (u.qx % 4 != 0 || u.qy % 4 != 0)
        throw std::invalid_argument("PotentialKernel: not a primal point");
    return at(u.qx / 4, u.qy / 4);
}

ExactScalar PotentialKernel::grad_green(GridPoint u, GridPoint v) {
    return at_point(u - v) - at_point(u) - at_point(v);
}

namespace {
double oracle_integrand(double t, int ax, int y) {
    // potential kernel a(x,y) integrand: (1 - e^{-|x| eta} cos(y t)) / sinh(eta),
    // cosh(eta) = 2 - cos(t)
    double c = 2.0 - std::cos(t);
    double eta = std::acosh(c);
    double sh = std::sinh(eta);
    if (t < 1e-8) {
        // eta ~ t, expand to avoid 0/0
        double num = ax * eta + 0.5 * y * y * t * t;
        return num / (sh == 0.0 ? eta : sh);
    }
    return (1.0 - std::exp(-ax * eta) * std::cos(y * t)) / sh;
}

double adaptive_simpson(int ax, int y, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = oracle_integrand(lm, ax, y), frm = oracle_integrand(rm, ax, y);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(ax, y, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           adaptive_simpson(ax, y, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}
}  // namespace

double PotentialKernel::fourier_oracle(int x, int y) {
    int ax = std::abs(x), ay = std::abs(y);
    double a = 0.0, b = M_PI;
    double fa = oracle_integrand(a, ax, ay), fb = oracle_integrand(b, ax, ay);
    double m = 0.5 * (a + b), fm = oracle_integrand(m, ax, ay);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double av = adaptive_simpson(ax, ay, a, b, fa, fm, fb, whole, 1e-13, 40) / M_PI;
    return -av / 4.0;  // G = -a/4
}

PotentialKernel& potential_kernel() {
    static PotentialKernel k;
    return k;
}

// ---------------------------------------------------------------------------
// Discrete domains
// ---------------------------------------------------------------------------

namespace {
const DiscreteDomain::Vertex kNbrs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
DiscreteDomain::Vertex add(DiscreteDomain::Vertex a, DiscreteDomain::Vertex b) {
    return {a.x + b.x, a.y + b.y};
}
}  // namespace

struct DiscreteDomain::Solvers {
    // exact mode
    std::vector<std::vector<Rational>> dirichlet_inv;  // interior x interior
    std::vector<std::vector<Rational>> neumann_pinned_inv;  // all x all
    // double mode
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> dirichlet_ldlt;
    bool dirichlet_ldlt_ready = false;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> neumann_lu;
    bool neumann_lu_ready = false;
    std::map<int, Eigen::VectorXd> dirichlet_cols, neumann_cols;
};

void DiscreteDomain::finalize(std::vector<Vertex> interior, std::vector<Vertex> boundary) {
    verts_ = std::move(interior);
    n_interior_ = verts_.size();
    verts_.insert(verts_.end(), boundary.begin(), boundary.end());
    for (size_t i = 0; i < verts_.size(); ++i) index_[verts_[i]] = int(i);
    if (index_.size() != verts_.size())
        throw std::logic_error("DiscreteDomain: duplicate vertices");
    solvers_ = std::make_shared<Solvers>();
}

int DiscreteDomain::index_of(Vertex v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

int DiscreteDomain::degree(Vertex v) const {
    int d = 0;
    for (auto n : kNbrs)
        if (contains(add(v, n))) ++d;
    return d;
}

DiscreteDomain DiscreteDomain::square(int mesh_n) {
    if (mesh_n < 4) throw std::invalid_argument("square: mesh_n >= 4 required");
    DiscreteDomain d;
    d.mesh_n_ = mesh_n;
    std::vector<Vertex> in, bd;
    for (int x = 0; x <= mesh_n; ++x)
        for (int y = 0; y <= mesh_n; ++y) {
            Vertex v{x, y};
            if (x == 0 || y == 0 || x == mesh_n || y == mesh_n)
                bd.push_back(v);
            else
                in.push_back(v);
        }
    d.finalize(std::move(in), std::move(bd));
    return d;
}

DiscreteDomain DiscreteDomain::disk(int mesh_n) {
    if (mesh_n < 4) throw std::invalid_argument("disk: mesh_n >= 4 required");
    DiscreteDomain d;
    d.mesh_n_ = mesh_n;
    int64_t rr = int64_t(mesh_n) * mesh_n;
    auto inside = [&](Vertex v) { return int64_t(v.x) * v.x + int64_t(v.y) * v.y < rr; };
    // connected component of the origin
    std::set<Vertex> interior;
    std::queue<Vertex> q;
    q.push({0, 0});
    interior.insert({0, 0});
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto n : kNbrs) {
            Vertex w = add(v, n);
            if (inside(w) && !interior.count(w)) {
                interior.insert(w);
                q.push(w);
            }
        }
    }
    std::set<Vertex> boundary;
    for (const auto& v : interior)
        for (auto n : kNbrs) {
            Vertex w = add(v, n);
            if (!interior.count(w)) boundary.insert(w);
        }
    d.finalize({interior.begin(), interior.end()}, {boundary.begin(), boundary.end()});
    return d;
}

DiscreteDomain DiscreteDomain::ball(int r) {
    if (r < 1) throw std::invalid_argument("ball: r >= 1 required");
    DiscreteDomain d;
    d.mesh_n_ = 1;
    d.ball_r_ = r;
    std::vector<Vertex> in, bd;
    for (int x = -r - 1; x <= r + 1; ++x)
        for (int y = -r - 1; y <= r + 1; ++y) {
            int n1 = std::abs(x) + std::abs(y);
            if (n1 < r)
                in.push_back({x, y});
            else if (n1 == r)
                bd.push_back({x, y});
            else if (n1 == r + 1 && x != 0 && y != 0)
                bd.push_back({x, y});  // staircase corners of the Jordan curve
        }
    d.finalize(std::move(in), std::move(bd));
    return d;
}

bool DiscreteDomain::interior_connected() const {
    if (n_interior_ == 0) return false;
    std::set<Vertex> seen;
    std::queue<Vertex> q;
    q.push(verts_[0]);
    seen.insert(verts_[0]);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto n : kNbrs) {
            Vertex w = add(v, n);
            if (is_interior(w) && !seen.count(w)) {
                seen.insert(w);
                q.push(w);
            }
        }
    }
    return seen.size() == n_interior_;
}

namespace {
// Dense exact inverse by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::runtime_error("singular system in exact solve");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}
}  // namespace

Rational DiscreteDomain::green_exact(BC bc, Vertex z, Vertex w) const {
    if (!exact_mode()) throw std::logic_error("green_exact: domain too large for exact mode");
    if (!contains(z) || !contains(w)) throw std::invalid_argument("green_exact: point not in domain");
    auto& S = *solvers_;
    if (bc == BC::dirichlet) {
        if (is_boundary(z) || is_boundary(w)) return Rational(0);
        if (S.dirichlet_inv.empty()) {
            size_t n = n_interior_;
            std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
            for (size_t i = 0; i < n; ++i) {
                m[i][i] = 4;
                for (auto nb : kNbrs) {
                    int j = index_of(add(verts_[i], nb));
                    if (j >= 0 && size_t(j) < n) m[i][j] = -1;
                }
            }
            S.dirichlet_inv = invert(std::move(m));
        }
        return S.dirichlet_inv[index_of(z)][index_of(w)];
    }
    // Neumann: invert the Laplacian with row 0 replaced by the zero-average
    // constraint; G^N(.,w) = A^{-1}(b - delta_w) with b uniform on the boundary.
    if (S.neumann_pinned_inv.empty()) {
        size_t n = verts_.size();
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        for (size_t i = 1; i < n; ++i) {
            m[i][i] = -degree(verts_[i]);
            for (auto nb : kNbrs) {
                int j = index_of(add(verts_[i], nb));
                if (j >= 0) m[i][j] = 1;
            }
        }
        for (size_t j = 0; j < n; ++j) m[0][j] = 1;
        S.neumann_pinned_inv = invert(std::move(m));
    }
    size_t n = verts_.size();
    size_t nb = n - n_interior_;
    Rational mass(1, long(nb));
    const auto& inv = S.neumann_pinned_inv;
    int zi = index_of(z), wi = index_of(w);
    Rational acc(0);
    for (size_t v = 1; v < n; ++v) {
        Rational rhs = (v >= n_interior_) ? mass : Rational(0);
        if (int(v) == wi) rhs -= 1;
        if (rhs != 0) acc += inv[zi][v] * rhs;
    }
    return acc;
}

double DiscreteDomain::green(BC bc, Vertex z, Vertex w) const {
    if (!contains(z) || !contains(w)) throw std::invalid_argument("green: point not in domain");
    auto& S = *solvers_;
    size_t n = verts_.size();
    if (bc == BC::dirichlet) {
        if (is_boundary(z) || is_boundary(w)) return 0.0;
        if (!S.dirichlet_ldlt_ready) {
            std::vector<Eigen::Triplet<double>> trips;
            for (size_t i = 0; i < n_interior_; ++i) {
                trips.emplace_back(i, i, 4.0);
                for (auto nb : kNbrs) {
                    int j = index_of(add(verts_[i], nb));
                    if (j >= 0 && size_t(j) < n_interior_) trips.emplace_back(i, j, -1.0);
                }
            }
            Eigen::SparseMatrix<double> m(n_interior_, n_interior_);
            m.setFromTriplets(trips.begin(), trips.end());
            S.dirichlet_ldlt.compute(m);
            if (S.dirichlet_ldlt.info() != Eigen::Success)
                throw std::runtime_error("dirichlet factorization failed");
            S.dirichlet_ldlt_ready = true;
        }
        int wi = index_of(w);
        auto it = S.dirichlet_cols.find(wi);
        if (it == S.dirichlet_cols.end()) {
            Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_interior_);
            rhs[wi] = 1.0;
            it = S.dirichlet_cols.emplace(wi, S.dirichlet_ldlt.solve(rhs)).first;
        }
        return it->second[index_of(z)];
    }
    if (!S.neumann_lu_ready) {
        std::vector<Eigen::Triplet<double>> trips;
        for (size_t i = 1; i < n; ++i) {
            trips.emplace_back(i, i, -double(degree(verts_[i])));
            for (auto nb : kNbrs) {
                int j = index_of(add(verts_[i], nb));
                if (j >= 0) trips.emplace_back(i, j, 1.0);
            }
        }
        for (size_t j = 0; j < n; ++j) trips.emplace_back(0, j, 1.0);
        Eigen::SparseMatrix<double> m(n, n);
        m.setFromTriplets(trips.begin(), trips.end());
        S.neumann_lu.compute(m);
        if (S.neumann_lu.info() != Eigen::Success)
            throw std::runtime_error("neumann factorization failed");
        S.neumann_lu_ready = true;
    }
    int wi = index_of(w);
    auto it = S.neumann_cols.find(wi);
    if (it == S.neumann_cols.end()) {
        Eigen::VectorXd rhs(n);
        double mass = 1.0 / double(n - n_interior_);
        for (size_t v = 0; v < n; ++v) rhs[v] = (v >= n_interior_) ? mass : 0.0;
        rhs[wi] -= 1.0;
        rhs[0] = 0.0;  // zero-average constraint row
        it = S.neumann_cols.emplace(wi, S.neumann_lu.solve(rhs)).first;
    }
    return it->second[index_of(z)];
}

double DiscreteDomain::neumann_green_with_mass(const std::map<Vertex, double>& mass, Vertex z,
                                               Vertex w) const {
    size_t n = verts_.size();
    // direct dense solve; used only in tests on small domains
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (size_t i = 1; i < n; ++i) {
        m(i, i) = -double(degree(verts_[i]));
        for (auto nb : kNbrs) {
            int j = index_of(add(verts_[i], nb));
            if (j >= 0) m(i, j) = 1.0;
        }
    }
    for (size_t j = 0; j < n; ++j) m(0, j) = 1.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (const auto& [v, b] : mass) rhs[index_of(v)] += b;
    rhs[index_of(w)] -= 1.0;
    rhs[0] = 0.0;
    Eigen::VectorXd sol = m.partialPivLu().solve(rhs);
    return sol[index_of(z)];
}

Rational DiscreteDomain::harmonic_measure(Vertex b, Vertex v) const {
    if (ball_r_ == 0) throw std::logic_error("harmonic_measure: only for ball domains");
    if (!is_boundary(b) || std::abs(b.x) + std::abs(b.y) != ball_r_)
        throw std::invalid_argument("harmonic_measure: b not on C(r)");
    if (!is_interior(v)) throw std::invalid_argument("harmonic_measure: v not interior");
    // Neumann Laplacian of the Dirichlet Green's function at a boundary point:
    // only interior neighbors contribute since G^D vanishes on the boundary.
    Rational acc(0);
    for (auto nb : kNbrs) {
        Vertex w = add(b, nb);
        if (is_interior(w)) acc += green_exact(BC::dirichlet, w, v);
    }
    return acc;
}

std::vector<DiscreteDomain::Vertex> DiscreteDomain::circle() const {
    if (ball_r_ == 0) throw std::logic_error("circle: only for ball domains");
    std::vector<Vertex> out;
    for (size_t i = n_interior_; i < verts_.size(); ++i)
        if (std::abs(verts_[i].x) + std::abs(verts_[i].y) == ball_r_) out.push_back(verts_[i]);
    return out;
}

}  // namespace dgff
