#pragma once

// Laurent polynomials in one variable q with arbitrary-precision integer
// coefficients.  Values are immutable maps exponent -> coefficient; zero
// coefficients are never stored, so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace skl {

using Int = boost::multiprecision::cpp_int;

class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(Int(c)) {}
    Laurent(Int c);

    // c * q^e
    static Laurent term(Int c, int e);
    static Laurent q(int e = 1) { return term(1, e); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int e) const;
    Int constant_coeff() const { return coeff(0); }
    // Exponent range; both require a nonzero polynomial.
    int min_exp() const;
    int max_exp() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent&) const = default;

    // q -> q^{-1}
    Laurent bar() const;
    // q -> -q^{-1}
    Laurent substitute_neg_inv() const;
    Int eval_at_one() const;
    // Truncation: keep exponents e with lo <= e <= hi.
    Laurent slice(int lo, int hi) const;

    bool in_z_q() const;        // no negative exponents
    bool in_q_z_q() const;      // exponents all >= 1
    bool in_z_qinv() const;     // no positive exponents
    bool in_qinv_z_qinv() const;// exponents all <= -1
    bool nonneg_coeffs() const;
    bool bar_symmetric() const { return bar() == *this; }

    std::string str() const;
    // Inverse of str(); accepts forms like "q^3 + 2*q - q^-1", "-5", "0".
    static Laurent parse(const std::string& s);

private:
    std::map<int, Int> terms_;
};

// Quantum integer [n] = (q^n - q^-n)/(q - q^-1); [0] = 0, [-n] = -[n].
Laurent quantum_int(int n);
// [n]! = [n][n-1]...[1]; requires n >= 0.
Laurent quantum_factorial(int n);
// Exact division; throws std::domain_error when b is zero or does not divide a.
Laurent exact_div(const Laurent& a, const Laurent& b);

}  // namespace skl
