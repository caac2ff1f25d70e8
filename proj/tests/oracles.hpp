#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

#include "srs/half_int.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

struct Rational {
    BigInt num{0};
    BigInt den{1};
    void reduce() {
        if (den < 0) { num = -num; den = -den; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    Rational operator+(const Rational& o) const {
        Rational r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Rational operator*(const Rational& o) const {
        Rational r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    double to_double() const { return num.convert_to<double>() / den.convert_to<double>(); }
};

inline BigInt factorial(int n) {
    if (n < 0) throw std::logic_error("factorial of negative");
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Racah sum for the 3j symbol in exact rational arithmetic; the result is
// sign * sqrt(rational), returned as a double.
inline double wigner3j(srs::HalfInt j1, srs::HalfInt j2, srs::HalfInt j3,
                       srs::HalfInt m1, srs::HalfInt m2, srs::HalfInt m3) {
    const int tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
    const int tm1 = m1.twice(), tm2 = m2.twice(), tm3 = m3.twice();
    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if ((tj1 + tm1) % 2 || (tj2 + tm2) % 2 || (tj3 + tm3) % 2) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    if ((tj1 + tj2 + tj3) % 2 != 0) return 0.0;
    if (tj3 < std::abs(tj1 - tj2) || tj3 > tj1 + tj2) return 0.0;

    const int lo = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
    const int hi = std::min({(tj1 + tj2 - tj3) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    if (lo > hi) return 0.0;

    Rational sum{0, 1};
    for (int t = lo; t <= hi; ++t) {
        BigInt den = factorial(t) * factorial((tj3 - tj2 + tm1) / 2 + t) *
                     factorial((tj3 - tj1 - tm2) / 2 + t) *
                     factorial((tj1 + tj2 - tj3) / 2 - t) *
                     factorial((tj1 - tm1) / 2 - t) * factorial((tj2 + tm2) / 2 - t);
        Rational term{(t % 2 ? -1 : 1), den};
        sum = sum + term;
    }

    // value^2 = Delta * prod (j +- m)! * sum^2, carried exactly
    Rational delta{factorial((tj1 + tj2 - tj3) / 2) * factorial((tj1 - tj2 + tj3) / 2) *
                       factorial((-tj1 + tj2 + tj3) / 2),
                   factorial((tj1 + tj2 + tj3) / 2 + 1)};
    Rational prod{factorial((tj1 + tm1) / 2) * factorial((tj1 - tm1) / 2) *
                      factorial((tj2 + tm2) / 2) * factorial((tj2 - tm2) / 2) *
                      factorial((tj3 + tm3) / 2) * factorial((tj3 - tm3) / 2),
                  1};
    const double mag = std::sqrt(delta.to_double() * prod.to_double()) *
                       std::abs(sum.to_double());
    int sign = sum.num < 0 ? -1 : (sum.num > 0 ? 1 : 0);
    sign *= (((tj1 - tj2 - tm3) / 2) % 2) ? -1 : 1;
    return sign * mag;
}

inline bool triangle(int a, int b, int c) {
    return (a + b + c) % 2 == 0 && c >= std::abs(a - b) && c <= a + b;
}

inline double wigner6j(srs::HalfInt j1, srs::HalfInt j2, srs::HalfInt j3,
                       srs::HalfInt j4, srs::HalfInt j5, srs::HalfInt j6) {
    const int a = j1.twice(), b = j2.twice(), c = j3.twice();
    const int d = j4.twice(), e = j5.twice(), f = j6.twice();
    if (!triangle(a, b, c) || !triangle(d, e, c) || !triangle(a, e, f) || !triangle(d, b, f))
        return 0.0;
    auto delta = [](int x, int y, int z) {
        return Rational{factorial((x + y - z) / 2) * factorial((x - y + z) / 2) *
                            factorial((-x + y + z) / 2),
                        factorial((x + y + z) / 2 + 1)};
    };
    const int tri[4] = {(a + b + c) / 2, (d + e + c) / 2, (a + e + f) / 2, (d + b + f) / 2};
    const int quad[3] = {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
    const int lo = std::max({tri[0], tri[1], tri[2], tri[3]});
    const int hi = std::min({quad[0], quad[1], quad[2]});
    if (lo > hi) return 0.0;
    Rational sum{0, 1};
    for (int t = lo; t <= hi; ++t) {
        BigInt den = 1;
        for (int s : tri) den *= factorial(t - s);
        for (int s : quad) den *= factorial(s - t);
        Rational term{(t % 2 ? -1 : 1) * factorial(t + 1), den};
        sum = sum + term;
    }
    const Rational dd = delta(a, b, c) * delta(d, e, c) * delta(a, e, f) * delta(d, b, f);
    const double mag = std::sqrt(dd.to_double()) * std::abs(sum.to_double());
    return (sum.num < 0 ? -1.0 : 1.0) * mag;
}

} // namespace oracle
