#pragma once

#include <string>
#include <vector>

namespace octacomb {

// Overflow-checked 64-bit arithmetic; magnitudes at desk scale stay tiny,
// an overflow signals a bug and aborts loudly.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// Polynomial in q with exact integer coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<long long> ascending);
    static QPoly constant(long long v);
    static QPoly q_power(int j);

    long long coeff(int j) const;
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly&, const QPoly&) = default;
    friend auto operator<=>(const QPoly&, const QPoly&) = default;

    std::string str() const;     // "q + 2*q^2"

private:
    void trim();
    std::vector<long long> c_;   // c_[j] multiplies q^j
};

// Exact rational with checked 64-bit numerator and denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);

    bool is_integer() const { return den == 1; }
    bool negative() const { return num < 0; }
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace octacomb
