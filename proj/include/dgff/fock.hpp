#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dgff/exact.hpp"

namespace dgff {

/// Integer partition: weakly decreasing list of positive parts.
using Partition = std::vector<int>;

int partition_grade(const Partition& p);
Partition partition_add(const Partition& p, int part);     // insert a part
Partition partition_remove(const Partition& p, int part);  // remove one copy

enum class Chirality { holo, anti };

/// A vector of the two-chiral Fock space: finitely supported map from pairs
/// of partitions (lambda, lambda_bar) to scalars. (lambda, lambda_bar)
/// indexes the basis vector a_{-lambda} abar_{-lambda_bar} |vac>.
class FockVector {
public:
    using Key = std::pair<Partition, Partition>;

    FockVector() = default;
    static FockVector vacuum() { return basis({}, {}); }
    static FockVector basis(Partition holo, Partition anti,
                            ExactScalar coeff = ExactScalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, ExactScalar>& terms() const { return terms_; }
    ExactScalar coeff(const Partition& holo, const Partition& anti) const;

    void add_term(const Key& k, const ExactScalar& c);

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const ExactScalar& s) const;
    FockVector& operator+=(const FockVector& o);
    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

    /// Decomposition into bigraded components (Delta, Delta_bar).
    std::map<std::pair<int, int>, FockVector> bigrade_components() const;
    /// Total grade max over support (0 for the zero vector).
    int max_grade() const;

    std::string to_json() const;

private:
    std::map<Key, ExactScalar> terms_;
};

/// Action of the Heisenberg mode a_k (k<0 creation, k>0 annihilation, k=0 zero)
/// in the given chirality.
FockVector heisenberg_apply(int k, Chirality chi, const FockVector& v);

/// Apply a word of modes, rightmost first.
FockVector apply_word(const std::vector<std::pair<int, Chirality>>& word, const FockVector& v);

/// Sugawara Virasoro mode L_n (or Lbar_n) with central charge c = 1:
///   L_n = 1/2 ( sum_{k>=0} a_{n-k} a_k + sum_{k<0} a_k a_{n-k} ).
FockVector sugawara_L(int n, Chirality chi, const FockVector& v);

struct PrimaryResult {
    bool primary = false;
    bool homogeneous = false;
    std::optional<std::pair<int, int>> weights;  // (Delta, Delta_bar) when homogeneous
    std::string diagnostic;
};

/// Check whether v is a Virasoro primary: an L0/L0bar eigenvector with
/// L_n v = 0 = Lbar_n v for 1 <= n <= max(grade, max_mode).
PrimaryResult is_primary(const FockVector& v, int max_mode = 2);

}  // namespace dgff
