#include "dgff/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dgff {

int partition_grade(const Partition& p) {
    int g = 0;
    for (int k : p) g += k;
    return g;
}

Partition partition_add(const Partition& p, int part) {
    Partition q = p;
    q.insert(std::lower_bound(q.begin(), q.end(), part, std::greater<int>()), part);
    return q;
}

Partition partition_remove(const Partition& p, int part) {
    Partition q = p;
    auto it = std::find(q.begin(), q.end(), part);
    if (it == q.end()) throw std::invalid_argument("partition_remove: part absent");
    q.erase(it);
    return q;
}

FockVector FockVector::basis(Partition holo, Partition anti, ExactScalar coeff) {
    std::sort(holo.begin(), holo.end(), std::greater<int>());
    std::sort(anti.begin(), anti.end(), std::greater<int>());
    FockVector v;
    v.add_term({std::move(holo), std::move(anti)}, coeff);
    return v;
}

ExactScalar FockVector::coeff(const Partition& holo, const Partition& anti) const {
    auto it = terms_.find({holo, anti});
    return it == terms_.end() ? ExactScalar() : it->second;
}

void FockVector::add_term(const Key& k, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    r += o;
    return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

FockVector FockVector::operator*(const ExactScalar& s) const {
    FockVector r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
    return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

std::map<std::pair<int, int>, FockVector> FockVector::bigrade_components() const {
    std::map<std::pair<int, int>, FockVector> out;
    for (const auto& [k, c] : terms_)
        out[{partition_grade(k.first), partition_grade(k.second)}].add_term(k, c);
    return out;
}

int FockVector::max_grade() const {
    int g = 0;
    for (const auto& [k, c] : terms_)
        g = std::max(g, partition_grade(k.first) + partition_grade(k.second));
    return g;
}

std::string FockVector::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
        arr.push_back({{"holo", k.first},
                       {"anti", k.second},
                       {"coeff", nlohmann::json::parse(c.to_json())}});
    }
    return arr.dump();
}

FockVector heisenberg_apply(int k, Chirality chi, const FockVector& v) {
    FockVector out;
    if (k == 0) return out;  // a_0 annihilates the chargeless Fock space
    for (const auto& [key, c] : v.terms()) {
        const Partition& part = (chi == Chirality::holo) ? key.first : key.second;
        if (k < 0) {
            Partition np = partition_add(part, -k);
            FockVector::Key nk = key;
            (chi == Chirality::holo ? nk.first : nk.second) = np;
            out.add_term(nk, c);
        } else {
            long mult = std::count(part.begin(), part.end(), k);
            if (mult == 0) continue;
            Partition np = partition_remove(part, k);
            FockVector::Key nk = key;
            (chi == Chirality::holo ? nk.first : nk.second) = np;
            out.add_term(nk, c * ExactScalar(k * mult));
        }
    }
    return out;
}

FockVector apply_word(const std::vector<std::pair<int, Chirality>>& word, const FockVector& v) {
    FockVector cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = heisenberg_apply(it->first, it->second, cur);
    return cur;
}

FockVector sugawara_L(int n, Chirality chi, const FockVector& v) {
    FockVector out;
    int g = v.max_grade();
    const ExactScalar half{Rational(1, 2)};
    // sum_{k >= 0} a_{n-k} a_k : a_k kills grades below k
    for (int k = 0; k <= g; ++k) {
        FockVector w = heisenberg_apply(k, chi, v);
        if (w.is_zero()) continue;
        out += heisenberg_apply(n - k, chi, w) * half;
    }
    // sum_{k < 0} a_k a_{n-k} : inner annihilator needs n-k <= g
    for (int k = -1; k >= n - g; --k) {
        FockVector w = heisenberg_apply(n - k, chi, v);
        if (w.is_zero()) continue;
        out += heisenberg_apply(k, chi, w) * half;
    }
    return out;
}

PrimaryResult is_primary(const FockVector& v, int max_mode) {
    PrimaryResult res;
    if (v.is_zero()) {
        res.diagnostic = "zero vector";
        return res;
    }
    auto comps = v.bigrade_components();
    if (comps.size() != 1) {
        res.diagnostic = "not homogeneous";
        return res;
    }
    res.homogeneous = true;
    auto [delta, delta_bar] = comps.begin()->first;
    res.weights = {delta, delta_bar};
    int top = std::max({max_mode, delta, delta_bar});
    for (int n = 1; n <= top; ++n) {
        if (!sugawara_L(n, Chirality::holo, v).is_zero()) {
            res.diagnostic = "L_" + std::to_string(n) + " does not annihilate";
            return res;
        }
        if (!sugawara_L(n, Chirality::anti, v).is_zero()) {
            res.diagnostic = "Lbar_" + std::to_string(n) + " does not annihilate";
            return res;
        }
    }
    res.primary = true;
    return res;
}

}  // namespace dgff
