#include "octacomb/qpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace octacomb {

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in coefficient arithmetic");
    return r;
}

QPoly::QPoly(std::initializer_list<long long> ascending) : c_(ascending)
{
    trim();
}

QPoly QPoly::constant(long long v)
{
    QPoly p;
    if (v != 0) p.c_ = {v};
    return p;
}

QPoly QPoly::q_power(int j)
{
    QPoly p;
    p.c_.assign(static_cast<size_t>(j) + 1, 0);
    p.c_.back() = 1;
    return p;
}

long long QPoly::coeff(int j) const
{
    return j >= 0 && j < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(j)] : 0;
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] = checked_add(c_[j], o.c_[j]);
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] = checked_add(c_[j], -o.c_[j]);
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
    r.trim();
    return r;
}

std::string QPoly::str() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!out.empty()) out += c_[j] > 0 ? " + " : " - ";
        else if (c_[j] < 0) out += "-";
        const long long a = c_[j] < 0 ? -c_[j] : c_[j];
        if (j == 0)
            out += std::to_string(a);
        else {
            if (a != 1) out += std::to_string(a) + "*";
            out += j == 1 ? "q" : "q^" + std::to_string(j);
        }
    }
    return out;
}

Rational::Rational(long long n, long long d) : num(n), den(d)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b)
{
    return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}

Rational operator-(const Rational& a, const Rational& b)
{
    return Rational(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
}

Rational operator*(const Rational& a, const Rational& b)
{
    return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

}  // namespace octacomb
