#include "dgff/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dgff {

Gaussian Gaussian::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("Gaussian::inverse of zero");
    return {re / n, -im / n};
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    ExactScalar r = *this;
    for (const auto& [k, g] : o.terms_) r.insert_term(k, g);
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    ExactScalar r = *this;
    for (const auto& [k, g] : o.terms_) r.insert_term(k, -g);
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r;
    for (const auto& [k, g] : terms_) r.terms_[k] = -g;
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    ExactScalar r;
    for (const auto& [k1, g1] : terms_)
        for (const auto& [k2, g2] : o.terms_) r.insert_term(k1 + k2, g1 * g2);
    return r;
}

bool ExactScalar::operator<(const ExactScalar& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second.re != b->second.re) return a->second.re < b->second.re;
        if (a->second.im != b->second.im) return a->second.im < b->second.im;
    }
    return b != o.terms_.end();
}

ExactScalar ExactScalar::conj() const {
    ExactScalar r;
    for (const auto& [k, g] : terms_) r.terms_[k] = g.conj();
    return r;
}

ExactScalar ExactScalar::inverse_monomial() const {
    if (terms_.size() != 1)
        throw std::domain_error("inverse_monomial: not a single pi-term");
    const auto& [k, g] = *terms_.begin();
    return pi_pow(-k, g.inverse());
}

std::complex<double> ExactScalar::to_float() const {
    std::complex<double> acc = 0.0;
    for (const auto& [k, g] : terms_)
        acc += g.to_complex() * std::pow(std::numbers::pi, double(k));
    return acc;
}

std::string ExactScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, g] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << g.re.get_str();
        if (g.im != 0) os << (g.im > 0 ? "+" : "") << g.im.get_str() << "i";
        os << ")";
        if (k != 0) os << "*pi^" << k;
    }
    return os.str();
}

std::string ExactScalar::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, g] : terms_)
        arr.push_back({{"k", k}, {"re", g.re.get_str()}, {"im", g.im.get_str()}});
    return arr.dump();
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

ExactScalar ExactScalar::from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    ExactScalar s;
    for (const auto& t : arr) {
        Gaussian g(rational_from_string(t.at("re").get<std::string>()),
                   rational_from_string(t.at("im").get<std::string>()));
        s.insert_term(t.at("k").get<int>(), g);
    }
    return s;
}

}  // namespace dgff
