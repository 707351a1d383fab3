#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qap {

// Exact sparse multivariate polynomial with 64-bit integer coefficients.
// A monomial is a sorted list of variable ids (repeats encode powers), so
// equal polynomials always have identical term maps and equality is just
// map comparison. Intended for low-degree identity checking; coefficient
// arithmetic is plain int64 (inputs here stay tiny).
class Poly {
public:
    using Monomial = std::vector<int>;

    Poly() = default;
    static Poly constant(std::int64_t c);
    static Poly var(int id);

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator-() const;
    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    std::int64_t coeff(const Monomial& monomial) const;  // monomial must be sorted
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

    // values[id] supplies each variable; ids beyond the vector are an error.
    std::int64_t eval(const std::vector<std::int64_t>& values) const;

    // Replaces variables by polynomials; ids absent from the map stay as is.
    Poly substitute(const std::map<int, Poly>& mapping) const;

    std::string to_string(const std::function<std::string(int)>& var_name) const;

private:
    void add_term(const Monomial& monomial, std::int64_t coefficient);

    std::map<Monomial, std::int64_t> terms_;
};

}  // namespace qap
