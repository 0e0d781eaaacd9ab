#include "doctest.h"

#include "ribbon/poly.hpp"

#include <random>

using namespace ribbon;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

HalfPoly v(const std::string& name) {
    return HalfPoly::variable(name);
}

// Small dense reference: exponent triple (doubled) -> coefficient.
using Dense = std::map<std::vector<int>, long long>;

Dense random_dense(std::mt19937_64& rng) {
    Dense d;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e{static_cast<int>(rng() % 5), static_cast<int>(rng() % 4), static_cast<int>(rng() % 3)};
        long long c = static_cast<long long>(rng() % 7) - 3;
        d[e] += c;
    }
    for (auto it = d.begin(); it != d.end();) it = it->second == 0 ? d.erase(it) : std::next(it);
    return d;
}

HalfPoly to_poly(const Dense& d) {
    HalfPoly p(XYZ);
    for (const auto& [e, c] : d) p.add_term(e, c);
    return p;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

TEST_CASE("ring operations on small examples") {
    CHECK((v("x") + v("y")).to_string() == "x + y");
    CHECK(HalfPoly::variable("x", 1) * HalfPoly::variable("x", 1) == v("x"));
    CHECK(((HalfPoly::constant(1) + v("y")) * (HalfPoly::constant(1) + v("y"))).to_string() == "y^2 + 2*y + 1");
    CHECK((v("x") - v("x")).is_zero());
    CHECK(HalfPoly::variable("x", 3).to_string() == "x^(3/2)");
    CHECK(HalfPoly::variable("x", -2).to_string() == "x^-1");
}

TEST_CASE("multiplication agrees with a dense reference") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Dense a = random_dense(rng), b = random_dense(rng);
        CHECK(to_poly(a) * to_poly(b) == to_poly(dense_mul(a, b)));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        HalfPoly a = to_poly(random_dense(rng)), b = to_poly(random_dense(rng)), c = to_poly(random_dense(rng));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("equality ignores variable order and unused variables") {
    HalfPoly p = HalfPoly::monomial({"x", "y"}, {2, 0}) + HalfPoly::monomial({"x", "y"}, {0, 2});
    HalfPoly q = HalfPoly::monomial({"y", "x", "w"}, {2, 0, 0}) + HalfPoly::monomial({"y", "x", "w"}, {0, 2, 0});
    CHECK(p == q);
}

TEST_CASE("substitution") {
    CHECK((v("w") + v("x")).substitute({{"w", v("x")}}).to_string() == "2*x");
    CHECK(HalfPoly::variable("x", 1).substitute({{"x", v("x") * v("x")}}) == v("x"));
    HalfPoly s = HalfPoly::variable("x", 1) + HalfPoly::variable("z", 1);
    CHECK(s.substitute({{"x", v("z")}, {"z", v("x")}}) == s);
    // x^(1/2) with x -> y would need y^(1/2): fine; x -> 2y has no square root
    CHECK_THROWS_AS(HalfPoly::variable("x", 1).substitute({{"x", HalfPoly::constant(2) * v("y")}}), PolyError);
    // quarter exponents are rejected
    CHECK_THROWS_AS(HalfPoly::variable("x", 1).substitute({{"x", HalfPoly::variable("y", 1)}}), PolyError);
    // negative powers need monomial images with unit coefficient
    CHECK(HalfPoly::variable("x", -2).substitute({{"x", v("y") * v("y")}}) == HalfPoly::variable("y", -4));
    CHECK_THROWS_AS(HalfPoly::variable("x", -2).substitute({{"x", v("y") + v("z")}}), PolyError);
}

TEST_CASE("rational evaluation") {
    using R = Rational;
    CHECK((v("x") + HalfPoly::constant(1)).eval({{"x", R(2)}}) == R(3));
    CHECK(HalfPoly::variable("x", 1).eval({{"x", R(4)}}) == R(2));
    CHECK(HalfPoly::variable("x", 1).eval({{"x", R(9, 4)}}) == R(3, 2));
    CHECK_THROWS_AS(HalfPoly::variable("x", 1).eval({{"x", R(-1)}}), PolyError);
    CHECK_THROWS_AS(HalfPoly::variable("x", 1).eval({{"x", R(2)}}), PolyError);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        HalfPoly a = to_poly(random_dense(rng)), b = to_poly(random_dense(rng));
        // squares keep the half exponents rational
        const Rational k(static_cast<int>(rng() % 5), 1);
        std::map<std::string, Rational> at{{"x", k * k},
                                           {"y", Rational(static_cast<int>(rng() % 4 + 1), 9)},
                                           {"z", Rational(static_cast<int>(rng() % 3), 1)}};
        at["y"] = at["y"] * at["y"];
        at["z"] = at["z"] * at["z"];
        CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
        CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    }
}

TEST_CASE("canonical text round-trips through the parser") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        HalfPoly a = to_poly(random_dense(rng)) * to_poly(random_dense(rng));
        const std::string s = a.to_string();
        CHECK(HalfPoly::parse(s) == a);
        CHECK(HalfPoly::parse(s).to_string() == s);
    }
    CHECK(HalfPoly::parse("x^(1/2) + y^(1/2)").to_string() == "x^(1/2) + y^(1/2)");
    CHECK(HalfPoly::parse("2 x y^2").to_string() == "2*x*y^2");
    CHECK(HalfPoly::parse("0").is_zero());
    CHECK_THROWS_AS(HalfPoly::parse("x^(1/3)"), PolyError);
    CHECK_THROWS_AS(HalfPoly::parse("x +"), PolyError);
}

TEST_CASE("monomial square roots") {
    CHECK((HalfPoly::constant(4) * v("x")).monomial_sqrt() == HalfPoly::constant(2) * HalfPoly::variable("x", 1));
    CHECK_THROWS_AS((HalfPoly::constant(2) * v("x")).monomial_sqrt(), PolyError);
    CHECK_THROWS_AS((v("x") + v("y")).monomial_sqrt(), PolyError);
}
