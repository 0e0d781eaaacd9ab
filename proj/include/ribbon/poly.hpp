#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ribbon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse polynomial over Z whose exponents are half-integers, possibly
// negative (Laurent).  Exponents are stored doubled: x^(3/2) is {3}.
class HalfPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Integer>;

    HalfPoly() = default;
    explicit HalfPoly(std::vector<std::string> variables);

    static HalfPoly constant(const Integer& c);
    // var^(doubled/2)
    static HalfPoly variable(const std::string& name, int doubled = 2);
    static HalfPoly monomial(std::vector<std::string> variables, Exponents doubled, Integer coeff = 1);

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    // Same polynomial re-expressed over `variables`, which must contain every
    // variable actually used.
    HalfPoly over(const std::vector<std::string>& variables) const;

    // Adds a term; `doubled` is relative to variables().
    void add_term(const Exponents& doubled, const Integer& coeff);

    HalfPoly& operator+=(const HalfPoly& q);
    HalfPoly& operator-=(const HalfPoly& q);
    HalfPoly& operator*=(const HalfPoly& q);
    friend HalfPoly operator+(HalfPoly p, const HalfPoly& q) { return p += q; }
    friend HalfPoly operator-(HalfPoly p, const HalfPoly& q) { return p -= q; }
    friend HalfPoly operator*(HalfPoly p, const HalfPoly& q) { return p *= q; }
    HalfPoly operator-() const;

    // Semantic equality: variable order and unused variables are irrelevant.
    friend bool operator==(const HalfPoly& p, const HalfPoly& q);

    // Non-negative powers for anything; negative powers only for monomials.
    HalfPoly pow(int n) const;
    // Square root of a monomial with square coefficient and even doubled
    // exponents; throws otherwise.
    HalfPoly monomial_sqrt() const;

    // Simultaneous substitution.  A variable raised to a half-integer power
    // needs its image to be a monomial admitting a square root; negative
    // powers need a monomial image.
    HalfPoly substitute(const std::map<std::string, HalfPoly>& bindings) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    // Canonical text: terms by descending exponent tuple, "^(k/2)" for
    // half exponents.
    std::string to_string() const;
    static HalfPoly parse(std::string_view text);

private:
    void align_with(const std::vector<std::string>& other, std::vector<int>& map_other);
    int index_of(const std::string& name) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const HalfPoly& p);

// Exact square root of a non-negative rational, if it exists.
bool rational_sqrt(const Rational& q, Rational& root);

} // namespace ribbon
