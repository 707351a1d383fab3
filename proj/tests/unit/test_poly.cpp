#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qap/poly.hpp"

using namespace qap;

namespace {

std::string plain_name(int id) { return "x" + std::to_string(id); }

}  // namespace

TEST_CASE("poly: constants and variables") {
    CHECK(Poly().is_zero());
    CHECK(Poly::constant(0).is_zero());
    CHECK(Poly::constant(5).term_count() == 1);
    CHECK(Poly::constant(5).coeff({}) == 5);
    CHECK(Poly::var(3).coeff({3}) == 1);
    CHECK(Poly::var(3).coeff({2}) == 0);
}

TEST_CASE("poly: ring identities") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const Poly z = Poly::var(2);
    const Poly two = Poly::constant(2);

    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x + (-x) == Poly());
    CHECK(x * Poly::constant(0) == Poly());
    CHECK(x * Poly::constant(1) == x);
    CHECK(two * (x + y) == x + x + y + y);
}

TEST_CASE("poly: cancellation prunes zero coefficients") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const Poly p = (x + y) * (x - y);     // x^2 - y^2, cross terms cancel
    CHECK(p.term_count() == 2);
    CHECK(p.coeff({0, 0}) == 1);
    CHECK(p.coeff({1, 1}) == -1);
    CHECK(p.coeff({0, 1}) == 0);
    const Poly q = x * y - y * x;
    CHECK(q.is_zero());
    CHECK(q.term_count() == 0);
}

TEST_CASE("poly: monomials are canonical regardless of multiplication order") {
    const Poly a = Poly::var(4) * Poly::var(1) * Poly::var(7);
    const Poly b = Poly::var(7) * Poly::var(4) * Poly::var(1);
    CHECK(a == b);
    CHECK(a.coeff({1, 4, 7}) == 1);
}

TEST_CASE("poly: eval matches the algebra") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const Poly p = x * x * Poly::constant(3) - x * y + Poly::constant(7);
    const std::vector<std::int64_t> at{2, 5};
    CHECK(p.eval(at) == 3 * 4 - 10 + 7);
    CHECK(Poly().eval(at) == 0);
    CHECK(Poly::constant(-4).eval({}) == -4);
    CHECK_THROWS_AS(p.eval({1}), std::out_of_range);
}

TEST_CASE("poly: substitute replaces variables by polynomials") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const Poly p = x * y + x;

    std::map<int, Poly> zero_x{{0, Poly()}};
    CHECK(p.substitute(zero_x).is_zero());

    std::map<int, Poly> rename{{1, Poly::var(2)}};
    CHECK(p.substitute(rename) == x * Poly::var(2) + x);

    std::map<int, Poly> expand{{0, y + Poly::constant(1)}};
    const Poly expected = (y + Poly::constant(1)) * y + y + Poly::constant(1);
    CHECK(p.substitute(expand) == expected);

    CHECK(p.substitute({}) == p);
}

TEST_CASE("poly: substitution commutes with evaluation") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const Poly p = x * x + Poly::constant(2) * x * y - y;
    std::map<int, Poly> sub{{0, y * y - Poly::constant(3)}};
    const Poly q = p.substitute(sub);
    for (std::int64_t v = -3; v <= 3; ++v) {
        const std::int64_t xv = v * v - 3;
        CHECK(q.eval({0, v}) == p.eval({xv, v}));
    }
}

TEST_CASE("poly: to_string renders a readable canonical form") {
    const Poly x = Poly::var(0);
    const Poly y = Poly::var(1);
    const std::string s = (x * y - Poly::constant(2) * x).to_string(plain_name);
    CHECK(s.find("x0") != std::string::npos);
    CHECK(s.find("x1") != std::string::npos);
    CHECK(s.find('2') != std::string::npos);
    CHECK(Poly().to_string(plain_name) == "0");
}
