#include "qap/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qap {

Poly Poly::constant(std::int64_t c) {
    Poly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

Poly Poly::var(int id) {
    if (id < 0) throw std::invalid_argument("variable id must be non-negative");
    Poly p;
    p.terms_[{id}] = 1;
    return p;
}

void Poly::add_term(const Monomial& monomial, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& other) const {
    Poly out = *this;
    for (const auto& [mono, c] : other.terms_) out.add_term(mono, c);
    return out;
}

Poly Poly::operator-(const Poly& other) const {
    Poly out = *this;
    for (const auto& [mono, c] : other.terms_) out.add_term(mono, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = -c;
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    Poly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial mono;
            mono.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(mono));
            out.add_term(mono, ca * cb);
        }
    return out;
}

std::int64_t Poly::coeff(const Monomial& monomial) const {
    const auto it = terms_.find(monomial);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Poly::eval(const std::vector<std::int64_t>& values) const {
    std::int64_t total = 0;
    for (const auto& [mono, c] : terms_) {
        std::int64_t prod = c;
        for (int id : mono) prod *= values.at(static_cast<std::size_t>(id));
        total += prod;
    }
    return total;
}

Poly Poly::substitute(const std::map<int, Poly>& mapping) const {
    Poly out;
    for (const auto& [mono, c] : terms_) {
        Poly prod = Poly::constant(c);
        for (int id : mono) {
            const auto it = mapping.find(id);
            prod = prod * (it == mapping.end() ? Poly::var(id) : it->second);
        }
        out = out + prod;
    }
    return out;
}

std::string Poly::to_string(const std::function<std::string(int)>& var_name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        std::int64_t mag = c;
        if (out.empty()) {
            if (c < 0) { out += "-"; mag = -c; }
        } else {
            out += c < 0 ? " - " : " + ";
            mag = c < 0 ? -c : c;
        }
        const bool unit = mag == 1 && !mono.empty();
        if (!unit) out += std::to_string(mag);
        for (std::size_t t = 0; t < mono.size(); ++t) {
            if (t > 0 || !unit) out += "*";
            out += var_name(mono[t]);
        }
    }
    return out;
}

}  // namespace qap
