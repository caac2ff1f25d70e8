#include "srs/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace srs {
namespace {

// ln(n!) table; arguments stay below ~300 for j <= 50.
long double lnfact(int n) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(512, 0.0L);
        for (int k = 2; k < 512; ++k) t[k] = t[k - 1] + std::log(static_cast<long double>(k));
        return t;
    }();
    return table.at(static_cast<size_t>(n));
}

bool triangle_ok(int two_a, int two_b, int two_c) {
    if ((two_a + two_b + two_c) % 2 != 0) return false;
    return two_c >= std::abs(two_a - two_b) && two_c <= two_a + two_b;
}

// ln of the triangle coefficient Delta(abc)
long double ln_delta(int two_a, int two_b, int two_c) {
    return lnfact((two_a + two_b - two_c) / 2) +
           lnfact((two_a - two_b + two_c) / 2) +
           lnfact((-two_a + two_b + two_c) / 2) -
           lnfact((two_a + two_b + two_c) / 2 + 1);
}

int parity(int k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3) {
    const int tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
    const int tm1 = m1.twice(), tm2 = m2.twice(), tm3 = m3.twice();

    if (tj1 < 0 || tj2 < 0 || tj3 < 0) return 0.0;
    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    if (!triangle_ok(tj1, tj2, tj3)) return 0.0;

    // Racah sum index range (all quantities are plain integers)
    const int lo = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
    const int hi = std::min({(tj1 + tj2 - tj3) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    if (lo > hi) return 0.0;

    const long double ln_pre =
        0.5L * (ln_delta(tj1, tj2, tj3) +
                lnfact((tj1 + tm1) / 2) + lnfact((tj1 - tm1) / 2) +
                lnfact((tj2 + tm2) / 2) + lnfact((tj2 - tm2) / 2) +
                lnfact((tj3 + tm3) / 2) + lnfact((tj3 - tm3) / 2));

    long double sum = 0.0L;
    for (int t = lo; t <= hi; ++t) {
        const long double ln_den =
            lnfact(t) +
            lnfact((tj3 - tj2 + tm1) / 2 + t) +
            lnfact((tj3 - tj1 - tm2) / 2 + t) +
            lnfact((tj1 + tj2 - tj3) / 2 - t) +
            lnfact((tj1 - tm1) / 2 - t) +
            lnfact((tj2 + tm2) / 2 - t);
        sum += parity(t) * std::exp(ln_pre - ln_den);
    }

    const int phase = parity((tj1 - tj2 - tm3) / 2);
    return static_cast<double>(phase * sum);
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt j4, HalfInt j5, HalfInt j6) {
    const int a = j1.twice(), b = j2.twice(), c = j3.twice();
    const int d = j4.twice(), e = j5.twice(), f = j6.twice();
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0 || f < 0) return 0.0;
    if (!triangle_ok(a, b, c) || !triangle_ok(d, e, c) ||
        !triangle_ok(a, e, f) || !triangle_ok(d, b, f))
        return 0.0;

    const std::array<int, 4> tri = {(a + b + c) / 2, (d + e + c) / 2,
                                    (a + e + f) / 2, (d + b + f) / 2};
    const std::array<int, 3> quad = {(a + b + d + e) / 2, (a + c + d + f) / 2,
                                     (b + c + e + f) / 2};

    const long double ln_pre =
        0.5L * (ln_delta(a, b, c) + ln_delta(d, e, c) + ln_delta(a, e, f) + ln_delta(d, b, f));

    const int lo = *std::max_element(tri.begin(), tri.end());
    const int hi = *std::min_element(quad.begin(), quad.end());
    if (lo > hi) return 0.0;

    long double sum = 0.0L;
    for (int t = lo; t <= hi; ++t) {
        long double ln_term = lnfact(t + 1);
        for (int s : tri) ln_term -= lnfact(t - s);
        for (int s : quad) ln_term -= lnfact(s - t);
        sum += parity(t) * std::exp(ln_pre + ln_term);
    }
    return static_cast<double>(sum);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
    if (m1.twice() + m2.twice() != M.twice()) return 0.0;
    const int phase = parity((j1.twice() - j2.twice() + M.twice()) / 2);
    const double dim = std::sqrt(static_cast<double>(J.twice() + 1));
    return phase * dim * wigner3j(j1, j2, J, m1, m2, -M);
}

} // namespace srs
