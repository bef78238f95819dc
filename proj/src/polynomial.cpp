#include "posetlie/polynomial.hpp"

#include <algorithm>

namespace posetlie {

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

Polynomial Polynomial::monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(std::size_t(degree) + 1, BigInt(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::binomial(long a, long b, int k) { return constant(a) + monomial(b, k); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::vector<std::int64_t> Polynomial::to_int64() const {
    std::vector<std::int64_t> out;
    for (const BigInt& x : c_) {
        if (!x.fits_slong_p()) throw std::overflow_error("coefficient does not fit in 64 bits");
        out.push_back(x.get_si());
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& s) {
    for (BigInt& x : c_) x *= s;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (BigInt& x : r.c_) x = -x;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial result{1}, base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute_power(int j) const {
    if (j < 1) throw std::invalid_argument("substitution exponent must be positive");
    if (is_zero()) return {};
    std::vector<BigInt> r(std::size_t(degree()) * j + 1, BigInt(0));
    for (int k = 0; k <= degree(); ++k) r[std::size_t(k) * j] = c_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(std::size_t(k), BigInt(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::divide_exact(const BigInt& s) const {
    Polynomial r = *this;
    for (BigInt& x : r.c_) {
        if (x % s != 0) throw DivisionError("inexact division of " + to_string() + " by " + s.get_str());
        x /= s;
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionError("division by zero polynomial");
    std::vector<BigInt> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) {
        if (is_zero()) return {};
        throw DivisionError("nonzero remainder");
    }
    std::vector<BigInt> q(std::size_t(degree() - dd) + 1, BigInt(0));
    for (int k = degree() - dd; k >= 0; --k) {
        const BigInt& top = rem[std::size_t(k + dd)];
        if (top % d.c_[dd] != 0) throw DivisionError("non-integral quotient");
        q[k] = top / d.c_[dd];
        for (int i = 0; i <= dd; ++i) rem[std::size_t(k + i)] -= q[k] * d.c_[i];
    }
    for (const BigInt& x : rem)
        if (x != 0) throw DivisionError("nonzero remainder dividing " + to_string() + " by " + d.to_string());
    return Polynomial(std::move(q));
}

BigInt Polynomial::evaluate(const BigInt& t) const {
    BigInt r = 0;
    for (int k = degree(); k >= 0; --k) r = r * t + c_[k];
    return r;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        BigInt a = abs(c_[k]);
        std::string term;
        if (k == 0 || a != 1) term = a.get_str();
        if (k >= 1) term += "t";
        if (k >= 2) term += "^" + std::to_string(k);
        if (out.empty())
            out = (c_[k] < 0 ? "-" : "") + term;
        else
            out += (c_[k] < 0 ? " - " : " + ") + term;
    }
    return out;
}

BigInt binom(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

std::vector<BigInt>& CyclotomicPolynomial::at(int deg) {
    if (int(c_.size()) <= deg) c_.resize(deg + 1, std::vector<BigInt>(p_, BigInt(0)));
    return c_[deg];
}

CyclotomicPolynomial CyclotomicPolynomial::substitute(const Polynomial& f, int p, int s, int j) {
    CyclotomicPolynomial r(p);
    for (int k = 0; k <= f.degree(); ++k) {
        if (f[k] == 0) continue;
        const int e = int((std::int64_t(s) * k) % p);
        r.at(k * j)[(e + p) % p] += f[k];
    }
    return r;
}

CyclotomicPolynomial CyclotomicPolynomial::lift(const Polynomial& f, int p) { return substitute(f, p, 0, 1); }

CyclotomicPolynomial& CyclotomicPolynomial::operator+=(const CyclotomicPolynomial& o) {
    for (std::size_t d = 0; d < o.c_.size(); ++d)
        for (int e = 0; e < p_; ++e) at(int(d))[e] += o.c_[d][e];
    return *this;
}

CyclotomicPolynomial& CyclotomicPolynomial::operator-=(const CyclotomicPolynomial& o) {
    for (std::size_t d = 0; d < o.c_.size(); ++d)
        for (int e = 0; e < p_; ++e) at(int(d))[e] -= o.c_[d][e];
    return *this;
}

CyclotomicPolynomial CyclotomicPolynomial::operator*(const CyclotomicPolynomial& o) const {
    CyclotomicPolynomial r(p_);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b) {
            auto& dst = r.at(int(a + b));
            for (int e = 0; e < p_; ++e) {
                if (c_[a][e] == 0) continue;
                for (int f = 0; f < p_; ++f)
                    if (o.c_[b][f] != 0) dst[(e + f) % p_] += c_[a][e] * o.c_[b][f];
            }
        }
    return r;
}

CyclotomicPolynomial CyclotomicPolynomial::pow(int e) const {
    CyclotomicPolynomial result = lift(Polynomial{1}, p_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Polynomial CyclotomicPolynomial::to_integer() const {
    std::vector<BigInt> out;
    for (const auto& coeffs : c_) {
        // x^(p-1) = -(1 + x + ... + x^(p-2)); the value is rational iff every
        // reduced coefficient of x^1..x^(p-2) vanishes.
        const BigInt& top = coeffs[p_ - 1];
        for (int e = 1; e < p_ - 1; ++e)
            if (coeffs[e] != top) throw DivisionError("root-of-unity expression is not rational");
        out.push_back(p_ == 1 ? coeffs[0] : coeffs[0] - top);
    }
    return Polynomial(std::move(out));
}

}  // namespace posetlie
