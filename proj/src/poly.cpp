#include "ribbon/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace ribbon {

HalfPoly::HalfPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

HalfPoly HalfPoly::constant(const Integer& c) {
    HalfPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

HalfPoly HalfPoly::variable(const std::string& name, int doubled) {
    return monomial({name}, {doubled}, 1);
}

HalfPoly HalfPoly::monomial(std::vector<std::string> variables, Exponents doubled, Integer coeff) {
    if (variables.size() != doubled.size()) throw PolyError("monomial: arity mismatch");
    HalfPoly p(std::move(variables));
    if (coeff != 0) p.terms_[std::move(doubled)] = std::move(coeff);
    return p;
}

int HalfPoly::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

HalfPoly HalfPoly::over(const std::vector<std::string>& variables) const {
    if (variables == vars_) return *this;
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        where[i] = it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
    }
    HalfPoly out(variables);
    for (const auto& [e, c] : terms_) {
        Exponents f(variables.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw PolyError("variable '" + vars_[i] + "' missing from target variable list");
            f[where[i]] = e[i];
        }
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

// Extends this polynomial's variables by those of `other` and reports where
// each of other's variables now lives.
void HalfPoly::align_with(const std::vector<std::string>& other, std::vector<int>& map_other) {
    map_other.assign(other.size(), -1);
    std::vector<std::string> merged = vars_;
    for (std::size_t i = 0; i < other.size(); ++i) {
        auto it = std::find(merged.begin(), merged.end(), other[i]);
        if (it == merged.end()) {
            map_other[i] = static_cast<int>(merged.size());
            merged.push_back(other[i]);
        } else {
            map_other[i] = static_cast<int>(it - merged.begin());
        }
    }
    if (merged.size() != vars_.size()) *this = over(merged);
}

void HalfPoly::add_term(const Exponents& doubled, const Integer& coeff) {
    if (doubled.size() != vars_.size()) throw PolyError("add_term: arity mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(doubled, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

HalfPoly::Exponents remap(const HalfPoly::Exponents& e, const std::vector<int>& where, std::size_t arity) {
    HalfPoly::Exponents f(arity, 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    return f;
}

} // namespace

HalfPoly& HalfPoly::operator+=(const HalfPoly& q) {
    std::vector<int> where;
    align_with(q.vars_, where);
    bool same = q.vars_ == vars_;
    for (const auto& [e, c] : q.terms_) add_term(same ? e : remap(e, where, vars_.size()), c);
    return *this;
}

HalfPoly& HalfPoly::operator-=(const HalfPoly& q) {
    return *this += -q;
}

HalfPoly HalfPoly::operator-() const {
    HalfPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

HalfPoly& HalfPoly::operator*=(const HalfPoly& q) {
    std::vector<int> where;
    align_with(q.vars_, where);
    const std::size_t n = vars_.size();
    std::vector<std::pair<Exponents, Integer>> qt;
    qt.reserve(q.terms_.size());
    for (const auto& [e, c] : q.terms_) qt.emplace_back(remap(e, where, n), c);

    Terms out;
    if (qt.size() == 1) {
        // monomial fast path: keys shift uniformly, so no collisions
        const auto& [qe, qc] = qt.front();
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t i = 0; i < n; ++i) f[i] += qe[i];
            out.emplace_hint(out.end(), std::move(f), c * qc);
        }
    } else {
        for (const auto& [e, c] : terms_) {
            for (const auto& [qe, qc] : qt) {
                Exponents f = e;
                for (std::size_t i = 0; i < n; ++i) f[i] += qe[i];
                auto [it, inserted] = out.emplace(std::move(f), c * qc);
                if (!inserted) {
                    it->second += c * qc;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }
    terms_ = std::move(out);
    return *this;
}

bool operator==(const HalfPoly& p, const HalfPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    HalfPoly a = p;
    std::vector<int> where;
    a.align_with(q.vars_, where);
    HalfPoly b = q.over(a.vars_);
    return a.terms_ == b.terms_;
}

HalfPoly HalfPoly::pow(int n) const {
    if (n < 0) {
        if (!is_monomial()) throw PolyError("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) throw PolyError("negative power of a monomial with coefficient other than +-1");
        Exponents f = e;
        for (int& x : f) x *= n;
        return monomial(vars_, f, (n % 2 != 0) ? c : Integer(1));
    }
    HalfPoly result = constant(1);
    HalfPoly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

HalfPoly HalfPoly::monomial_sqrt() const {
    if (!is_monomial()) throw PolyError("half power of a non-monomial would leave the half-integer exponent lattice");
    const auto& [e, c] = *terms_.begin();
    if (c < 0) throw PolyError("half power of a negative coefficient");
    Integer r = boost::multiprecision::sqrt(c);
    if (r * r != c) throw PolyError("half power of a non-square coefficient");
    Exponents f = e;
    for (int& x : f) {
        if (x % 2 != 0) throw PolyError("substitution would produce a quarter-integer exponent");
        x /= 2;
    }
    return monomial(vars_, f, r);
}

HalfPoly HalfPoly::substitute(const std::map<std::string, HalfPoly>& bindings) const {
    std::vector<std::string> out_vars;
    auto add_var = [&](const std::string& v) {
        if (std::find(out_vars.begin(), out_vars.end(), v) == out_vars.end()) out_vars.push_back(v);
    };
    for (const auto& v : vars_)
        if (!bindings.count(v)) add_var(v);
    for (const auto& [name, image] : bindings)
        for (const auto& v : image.variables()) add_var(v);

    std::vector<const HalfPoly*> image(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) image[i] = &it->second;
    }
    std::vector<std::map<int, HalfPoly>> power_cache(vars_.size());
    std::vector<HalfPoly> roots(vars_.size());
    std::vector<bool> have_root(vars_.size(), false);

    auto power = [&](std::size_t i, int doubled) -> const HalfPoly& {
        auto& cache = power_cache[i];
        auto it = cache.find(doubled);
        if (it != cache.end()) return it->second;
        HalfPoly value;
        if (!image[i]) {
            value = monomial({vars_[i]}, {doubled}, 1);
        } else if (doubled % 2 == 0) {
            value = image[i]->pow(doubled / 2);
        } else {
            if (!have_root[i]) {
                roots[i] = image[i]->monomial_sqrt();
                have_root[i] = true;
            }
            value = roots[i].pow(doubled);
        }
        return cache.emplace(doubled, value.over(out_vars)).first->second;
    };

    HalfPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
        HalfPoly t = monomial(out_vars, Exponents(out_vars.size(), 0), c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= power(i, e[i]);
        out += t;
    }
    return out;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    root = Rational(rn, rd);
    return true;
}

namespace {

Rational rational_pow(Rational base, int n) {
    if (n < 0) {
        if (base == 0) throw PolyError("division by zero in evaluation");
        base = 1 / base;
        n = -n;
    }
    Rational r = 1;
    while (n > 0) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

} // namespace

Rational HalfPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> value(vars_.size()), root(vars_.size());
    std::vector<int> root_state(vars_.size(), 0); // 0 unknown, 1 ok, -1 impossible
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it != point.end()) value[i] = it->second;
    }
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = Rational(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!point.count(vars_[i])) throw PolyError("no value given for variable '" + vars_[i] + "'");
            if (e[i] % 2 == 0) {
                t *= rational_pow(value[i], e[i] / 2);
                continue;
            }
            if (root_state[i] == 0) {
                if (value[i] < 0) throw PolyError("negative value under a half exponent for '" + vars_[i] + "'");
                root_state[i] = rational_sqrt(value[i], root[i]) ? 1 : -1;
            }
            if (root_state[i] < 0)
                throw PolyError("value of '" + vars_[i] + "' is not an exact rational square");
            t *= rational_pow(root[i], e[i]);
        }
        total += t;
    }
    return total;
}

namespace {

// Printing order: the fixed catalogues first, anything else alphabetically.
int print_rank(const std::string& v) {
    static const std::vector<std::string> order{"w",     "x",    "y",     "z",     "a",     "b",
                                                "alpha", "beta", "gamma", "a_bs",  "a_bp",  "a_olc",
                                                "a_olh", "b_bs", "b_bp",  "b_olc", "b_olh"};
    auto it = std::find(order.begin(), order.end(), v);
    return it == order.end() ? static_cast<int>(order.size()) : static_cast<int>(it - order.begin());
}

} // namespace

std::string HalfPoly::to_string() const {
    if (terms_.empty()) return "0";
    // re-express over the used variables in printing order, so equal
    // polynomials always print the same way
    std::vector<std::string> used;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (const auto& [e, c] : terms_)
            if (e[i] != 0) {
                used.push_back(vars_[i]);
                break;
            }
    std::sort(used.begin(), used.end(), [](const std::string& a, const std::string& b) {
        return std::pair(print_rank(a), a) < std::pair(print_rank(b), b);
    });
    if (used != vars_) return over(used).to_string();
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (constant_term) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << vars_[i];
            if (e[i] == 2) continue;
            if (e[i] % 2 == 0)
                os << "^" << e[i] / 2;
            else
                os << "^(" << e[i] << "/2)";
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HalfPoly& p) {
    return os << p.to_string();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    HalfPoly parse_all() {
        HalfPoly p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw PolyError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_factor_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    int small_int() {
        bool neg = accept('-');
        Integer v = integer();
        if (v > 1000000) fail("exponent too large");
        int n = static_cast<int>(v);
        return neg ? -n : n;
    }

    // returns doubled exponent
    int exponent() {
        if (accept('(')) {
            int num = small_int();
            int den = 1;
            if (accept('/')) den = small_int();
            if (!accept(')')) fail("expected ')'");
            if (den == 1) return 2 * num;
            if (den == 2) return num;
            fail("exponent denominators other than 1 and 2 are not allowed");
        }
        return 2 * small_int();
    }

    HalfPoly factor() {
        skip();
        if (accept('(')) {
            HalfPoly inner = sum();
            if (!accept(')')) fail("expected ')'");
            if (accept('^')) {
                int d = exponent();
                if (d % 2 != 0) return inner.monomial_sqrt().pow(d);
                return inner.pow(d / 2);
            }
            return inner;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return HalfPoly::constant(integer());
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a factor");
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        int d = 2;
        if (accept('^')) d = exponent();
        return HalfPoly::variable(name, d);
    }

    HalfPoly term() {
        HalfPoly t = factor();
        for (;;) {
            if (accept('*')) {
                t *= factor();
            } else if (at_factor_start()) {
                t *= factor();
            } else {
                break;
            }
        }
        return t;
    }

    HalfPoly sum() {
        HalfPoly p;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        HalfPoly t = term();
        p += neg ? -t : t;
        for (;;) {
            if (accept('+')) {
                p += term();
            } else if (accept('-')) {
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

HalfPoly HalfPoly::parse(std::string_view text) {
    return Parser(text).parse_all();
}

} // namespace ribbon
