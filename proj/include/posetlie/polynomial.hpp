#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "posetlie/smith.hpp"

namespace posetlie {

struct DivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial with GMP integer coefficients; index = degree.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long> coeffs);
    explicit Polynomial(std::vector<BigInt> coeffs);
    static Polynomial constant(const BigInt& c);
    static Polynomial monomial(const BigInt& c, int degree);
    /// (a + b t^k)
    static Polynomial binomial(long a, long b, int k = 1);

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt operator[](int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const { return c_; }
    std::vector<std::int64_t> to_int64() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const BigInt& s) { return a *= s; }
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

    Polynomial pow(int e) const;
    /// f(t^j)
    Polynomial substitute_power(int j) const;
    /// t^k f(t), k >= 0
    Polynomial shifted(int k) const;
    /// Exact division by an integer; DivisionError on remainder.
    Polynomial divide_exact(const BigInt& s) const;
    /// Exact division by a polynomial; DivisionError on nonzero remainder.
    Polynomial divide_exact(const Polynomial& d) const;
    BigInt evaluate(const BigInt& t) const;

    /// "1 + 4t + 6t^2"
    std::string to_string() const;

private:
    std::vector<BigInt> c_;
    void trim();
};

BigInt binom(long n, long k);

/// Polynomials in t whose coefficients lie in the group ring Z[x]/(x^p - 1),
/// x standing for a primitive p-th root of unity. Used to evaluate
/// root-of-unity averages exactly.
class CyclotomicPolynomial {
public:
    explicit CyclotomicPolynomial(int p) : p_(p) {}
    /// f(x^s t^j) for an integer polynomial f.
    static CyclotomicPolynomial substitute(const Polynomial& f, int p, int s, int j);
    static CyclotomicPolynomial lift(const Polynomial& f, int p);

    CyclotomicPolynomial& operator+=(const CyclotomicPolynomial& o);
    CyclotomicPolynomial& operator-=(const CyclotomicPolynomial& o);
    CyclotomicPolynomial operator*(const CyclotomicPolynomial& o) const;
    CyclotomicPolynomial pow(int e) const;

    /// Reduces modulo the p-th cyclotomic polynomial (p prime) and returns
    /// the integer polynomial if every coefficient is rational; DivisionError otherwise.
    Polynomial to_integer() const;

private:
    int p_;
    std::vector<std::vector<BigInt>> c_;  // c_[t-degree][x-exponent]
    std::vector<BigInt>& at(int deg);
};

}  // namespace posetlie
