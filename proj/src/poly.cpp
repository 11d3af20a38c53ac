#include "lpa/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

namespace {

bool is_prime_number(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

mpz_class mod_p(const mpz_class& a, std::uint32_t p) {
    mpz_class r = a % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1U << 16) || !is_prime_number(p)) {
        throw InvalidArgument("field characteristic " + std::to_string(p) + " is not a prime below 65536");
    }
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string t(text);
    if (t == "Q" || t == "QQ") return rationals();
    std::string digits;
    if (t.rfind("GF(", 0) == 0 && t.size() > 4 && t.back() == ')') {
        digits = t.substr(3, t.size() - 4);
    } else if (t.rfind("F_", 0) == 0) {
        digits = t.substr(2);
    } else if (!t.empty() && t[0] == 'F') {
        digits = t.substr(1);
    }
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw ParseError("unrecognized field '" + t + "' (expected Q or F<p>)");
    }
    return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::to_string() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

Rational FieldSpec::reduce(const Rational& a) const {
    if (is_rationals()) {
        Rational r = a;
        r.canonicalize();
        return r;
    }
    const mpz_class num = mod_p(a.get_num(), p_);
    const mpz_class den = mod_p(a.get_den(), p_);
    if (den == 0) throw InvalidArgument("denominator vanishes in " + to_string());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Rational(mod_p(num * inv, p_));
}

Rational FieldSpec::inverse(const Rational& a) const {
    const Rational r = reduce(a);
    if (r == 0) throw InvalidArgument("division by zero in " + to_string());
    if (is_rationals()) return Rational(1) / r;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), r.get_num_mpz_t(), mpz_class(p_).get_mpz_t());
    return Rational(inv);
}

Poly::Poly(FieldSpec field, std::vector<Rational> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& c : c_) c = field_.reduce(c);
    trim();
}

Poly::Poly(FieldSpec field, std::initializer_list<long> coeffs) : field_(field) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.push_back(field_.reduce(Rational(c)));
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inverse(leading()));
}

Poly Poly::scaled(const Rational& k) const {
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * k;
    return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(field_, std::move(out));
}

Rational Poly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.reduce(acc * at + *it);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_)) throw InvalidArgument("polynomials over different fields");
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_)) throw InvalidArgument("polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(out));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
    if (!(field_ == divisor.field_)) throw InvalidArgument("polynomials over different fields");
    if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Poly(field_), *this};
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1));
    const Rational lead_inv = field_.inverse(divisor.leading());
    for (int k = degree() - dd; k >= 0; --k) {
        const Rational q = field_.reduce(rem[static_cast<std::size_t>(k + dd)] * lead_inv);
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            auto& r = rem[static_cast<std::size_t>(k + j)];
            r = field_.reduce(r - q * divisor.c_[static_cast<std::size_t>(j)]);
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Poly Poly::operator%(const Poly& divisor) const { return divmod(divisor).remainder; }
Poly Poly::operator/(const Poly& divisor) const { return divmod(divisor).quotient; }

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// Literal parsing: sums of products of numbers, x, parenthesized
// subexpressions and integer powers. Works on Laurent polynomials so that
// x^-1 is accepted where a caller allows it.
namespace {

class LaurentParser {
public:
    LaurentParser(std::string_view text, FieldSpec field) : text_(text), field_(field) {}

    LaurentTerms run() {
        LaurentTerms t = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    LaurentTerms add(const LaurentTerms& a, const LaurentTerms& b, int sign) const {
        LaurentTerms out = a;
        for (const auto& [e, c] : b) out[e] = field_.reduce(out[e] + sign * c);
        return prune(std::move(out));
    }
    LaurentTerms mul(const LaurentTerms& a, const LaurentTerms& b) const {
        LaurentTerms out;
        for (const auto& [e1, c1] : a) {
            for (const auto& [e2, c2] : b) out[e1 + e2] = field_.reduce(out[e1 + e2] + c1 * c2);
        }
        return prune(std::move(out));
    }
    static LaurentTerms prune(LaurentTerms t) {
        std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
        return t;
    }

    LaurentTerms expr() {
        LaurentTerms acc;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        acc = add(acc, term(), sign);
        while (peek() == '+' || peek() == '-') {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            acc = add(acc, term(), sign);
        }
        return acc;
    }

    LaurentTerms term() {
        LaurentTerms acc = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = mul(acc, factor());
            } else if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c)) != 0) {
                acc = mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    LaurentTerms factor() {
        LaurentTerms base = primary();
        if (peek() != '^') return base;
        ++pos_;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        const long n = integer();
        if (negative) {
            if (base.size() != 1) fail("negative powers are only defined for monomials");
            const auto [e, c] = *base.begin();
            base = {{-e, field_.inverse(c)}};
        }
        LaurentTerms out{{0, Rational(1)}};
        for (long i = 0; i < n; ++i) out = mul(out, base);
        return out;
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 4) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentTerms primary() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return {{1, Rational(1)}};
        }
        if (c == '(') {
            ++pos_;
            LaurentTerms inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            Rational value(mpz_class(std::string(text_.substr(start, pos_ - start))));
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
                if (dstart == pos_) fail("expected a denominator");
                const mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
                if (den == 0) fail("zero denominator");
                try {
                    value = field_.reduce(value) * field_.inverse(Rational(den));
                } catch (const InvalidArgument& e) {
                    fail(e.what());
                }
            }
            try {
                value = field_.reduce(value);
            } catch (const InvalidArgument& e) {
                fail(e.what());
            }
            if (value == 0) return {};
            return {{0, value}};
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    FieldSpec field_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentTerms parse_laurent(std::string_view text, FieldSpec field) { return LaurentParser(text, field).run(); }

Poly Poly::parse(std::string_view text, FieldSpec field) {
    const LaurentTerms terms = parse_laurent(text, field);
    if (terms.empty()) return Poly(field);
    if (terms.begin()->first < 0) throw ParseError("polynomial '" + std::string(text) + "' has negative exponents");
    std::vector<Rational> c(static_cast<std::size_t>(terms.rbegin()->first + 1));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e)] = v;
    return Poly(field, std::move(c));
}

LaurentNormalForm normalize_laurent(const LaurentTerms& terms, FieldSpec field) {
    int low = 0;
    int high = 0;
    bool any = false;
    for (const auto& [e, c] : terms) {
        if (field.reduce(c) == 0) continue;
        if (!any) low = e;
        high = e;
        any = true;
    }
    if (!any) throw InvalidArgument("the zero Laurent polynomial has no normal form");
    std::vector<Rational> c(static_cast<std::size_t>(high - low + 1));
    for (const auto& [e, v] : terms) {
        if (e >= low && e <= high) c[static_cast<std::size_t>(e - low)] = v;
    }
    return {low, Poly(field, std::move(c))};
}

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd(0, 0) is undefined");
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw InvalidArgument("lcm of the zero polynomial");
    return ((f * g) / gcd(f, g)).monic();
}

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw InvalidArgument("square-freeness of the zero polynomial");
    if (f.is_constant()) return true;
    const Poly df = f.derivative();
    if (df.is_zero()) {
        // f(x) = g(x^p) = h(x)^p over F_p with h nonconstant: a p-th power.
        return false;
    }
    return gcd(f, df).is_constant();
}

std::vector<Poly> monic_polys(FieldSpec field, int degree) {
    if (field.is_rationals()) throw Unsupported("cannot enumerate polynomials over Q");
    if (degree < 0) return {};
    const std::uint64_t p = field.characteristic();
    std::uint64_t count = 1;
    for (int i = 0; i < degree; ++i) {
        count *= p;
        if (count > (1U << 22)) throw Unsupported("too many monic polynomials of degree " + std::to_string(degree) + " over " + field.to_string());
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
        std::uint64_t m = n;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<std::size_t>(i)] = Rational(static_cast<unsigned long>(m % p));
            m /= p;
        }
        c.back() = 1;
        out.emplace_back(field, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Poly> monic_irreducibles(FieldSpec field, int max_degree, bool nonzero_constant) {
    std::vector<Poly> irr;
    for (int d = 1; d <= max_degree; ++d) {
        for (auto& cand : monic_polys(field, d)) {
            bool reducible = false;
            for (const auto& q : irr) {
                if (2 * q.degree() > d) break;
                if (divides(q, cand)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) irr.push_back(std::move(cand));
        }
    }
    if (nonzero_constant) std::erase_if(irr, [](const Poly& q) { return q.constant_term() == 0; });
    return irr;
}

namespace {

void add_factor(std::vector<Factor>& out, const Poly& q) {
    for (auto& f : out) {
        if (f.factor == q) {
            ++f.multiplicity;
            return;
        }
    }
    out.push_back({q, 1});
}

std::vector<Factor> factor_prime_field(const Poly& f) {
    const FieldSpec field = f.field();
    const int half = f.degree() / 2;
    std::uint64_t budget = 0;
    std::uint64_t pd = 1;
    for (int d = 1; d <= half; ++d) {
        pd *= field.characteristic();
        budget += pd;
        if (budget > (1U << 20)) {
            throw Unsupported("trial division of a degree-" + std::to_string(f.degree()) + " polynomial over " +
                              field.to_string() + " exceeds the search budget");
        }
    }
    std::vector<Factor> out;
    Poly rest = f.monic();
    for (const auto& q : monic_irreducibles(field, half, false)) {
        if (2 * q.degree() > rest.degree()) break;
        while (true) {
            auto [quo, rem] = rest.divmod(q);
            if (!rem.is_zero()) break;
            add_factor(out, q);
            rest = std::move(quo);
        }
    }
    if (rest.degree() >= 1) add_factor(out, rest);
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > mpz_class("1000000000000")) throw Unsupported("coefficient too large for rational-root search");
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Factor> factor_rationals(const Poly& f) {
    const FieldSpec field = f.field();
    std::vector<Factor> out;
    Poly rest = f.monic();
    while (rest.constant_term() == 0) {
        add_factor(out, Poly::x(field));
        rest = rest / Poly::x(field);
    }
    while (rest.degree() >= 1) {
        // Integer multiple with coprime coefficients: roots a/b have a | c0, b | cn.
        mpz_class den_lcm = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        const mpz_class c0 = Rational(rest.constant_term() * den_lcm).get_num();
        const mpz_class cn = Rational(rest.leading() * den_lcm).get_num();
        bool found = false;
        for (const auto& a : positive_divisors(c0)) {
            for (const auto& b : positive_divisors(cn)) {
                for (int sign : {1, -1}) {
                    const Rational r = Rational(a * sign, b);
                    if (rest.eval(r) != 0) continue;
                    const Poly linear(field, std::vector<Rational>{-r, Rational(1)});
                    add_factor(out, linear);
                    rest = rest / linear;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) continue;
        if (rest.degree() <= 3) {
            add_factor(out, rest);
            break;
        }
        throw Unsupported("cannot factor " + rest.to_string() + " over Q: no rational roots and degree above 3");
    }
    return out;
}

}  // namespace

std::vector<Factor> irreducible_factors(const Poly& f) {
    if (f.is_constant()) throw InvalidArgument("constant polynomials have no irreducible factors");
    auto out = f.field().is_rationals() ? factor_rationals(f) : factor_prime_field(f);
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.factor < b.factor; });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    const auto fs = irreducible_factors(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace lpa
