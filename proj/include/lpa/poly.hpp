#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpa {

using Rational = mpq_class;

/// The coefficient field: Q or F_p for a prime p < 2^16.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InvalidArgument unless p is a prime below 2^16.
    static FieldSpec prime(std::uint32_t p);
    /// Accepts "Q", "F<p>", "F_<p>" or "GF(<p>)".
    static FieldSpec parse(std::string_view text);

    bool is_rationals() const { return p_ == 0; }
    /// 0 for Q.
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    /// Canonical representative: reduced fraction over Q, integer in
    /// [0, p) over F_p. Throws InvalidArgument when a denominator vanishes
    /// mod p.
    Rational reduce(const Rational& a) const;
    Rational inverse(const Rational& a) const;

    bool operator==(const FieldSpec&) const = default;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Dense univariate polynomial over a FieldSpec, coefficients stored
/// low-to-high with no trailing zeros.
class Poly {
public:
    explicit Poly(FieldSpec field) : field_(field) {}
    Poly(FieldSpec field, std::vector<Rational> coeffs);
    /// Convenience for small integer coefficients, low-to-high.
    Poly(FieldSpec field, std::initializer_list<long> coeffs);

    static Poly constant(FieldSpec field, const Rational& c) { return Poly(field, std::vector<Rational>{c}); }
    static Poly x(FieldSpec field) { return Poly(field, {0, 1}); }
    /// Parses a polynomial literal such as "x^2+3x+1" or "(x+1)^2".
    static Poly parse(std::string_view text, FieldSpec field);

    const FieldSpec& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& at) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& k) const;

    struct DivMod;
    /// Euclidean division; throws InvalidArgument for a zero divisor.
    DivMod divmod(const Poly& divisor) const;
    Poly operator%(const Poly& divisor) const;
    Poly operator/(const Poly& divisor) const;

    std::string to_string() const;

    bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
    /// By degree, then coefficients from the top down.
    bool operator<(const Poly& o) const;

private:
    void trim();

    FieldSpec field_;
    std::vector<Rational> c_;
};

struct Poly::DivMod {
    Poly quotient;
    Poly remainder;
};

/// x^shift * f(x) with f(0) != 0; the ideal it generates in K[x, x^-1] is <f>.
struct LaurentNormalForm {
    int shift;
    Poly f;
};

/// Exponent -> coefficient, as produced by parse_laurent.
using LaurentTerms = std::map<int, Rational>;

LaurentTerms parse_laurent(std::string_view text, FieldSpec field);
/// Throws InvalidArgument on the zero Laurent polynomial.
LaurentNormalForm normalize_laurent(const LaurentTerms& terms, FieldSpec field);

/// Monic gcd; throws InvalidArgument if both are zero.
Poly gcd(const Poly& f, const Poly& g);
/// Monic lcm of two nonzero polynomials.
Poly lcm(const Poly& f, const Poly& g);
/// True iff d divides f exactly (d nonzero).
bool divides(const Poly& d, const Poly& f);

/// No repeated irreducible factor. Throws InvalidArgument for zero.
bool is_squarefree(const Poly& f);

struct Factor {
    Poly factor;
    unsigned multiplicity;

    bool operator==(const Factor&) const = default;
};

/// Monic irreducible factors with multiplicity, sorted. Over F_p by trial
/// division; over Q by rational-root extraction with the cofactor required
/// to have degree at most 3. Throws Unsupported when that fails or when
/// trial division would be too large, InvalidArgument for constants.
std::vector<Factor> irreducible_factors(const Poly& f);

/// Irreducible in K[x] (degree >= 1, single factor of multiplicity one).
bool is_irreducible(const Poly& f);

/// Every monic polynomial of exactly `degree` over F_p, in increasing order.
std::vector<Poly> monic_polys(FieldSpec field, int degree);
/// Monic irreducibles over F_p of degree 1..max_degree, optionally only
/// those with nonzero constant term (the non-units of K[x, x^-1]).
std::vector<Poly> monic_irreducibles(FieldSpec field, int max_degree, bool nonzero_constant);

}  // namespace lpa
