#include "formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace sto {

Rat broom_local_mean(long n, long a, long b) {
    if (a < 0 || b < 1) throw std::invalid_argument("broom requires a >= 0, b >= 1");
    if (n != a + b + 1) throw std::invalid_argument("inconsistent broom order");
    Int x = pow2((unsigned long)b);
    Rat inner = make_rat(Int(a) * n, Int(a) + x);
    return Rat(n) - (Rat(b) + inner) / 2;
}

Aggregate double_broom_counts(long n, long s) {
    if (s < 1 || n - 2 * s < 2) throw std::invalid_argument("double-broom requires s >= 1, n-2s >= 2");
    Int p = n - 2 * s;  // path vertices
    Int sigma = pow2(2 * (unsigned long)s) + pow2((unsigned long)s + 1) * (p - 1) +
                binom(p - 1, 2) + 2 * s;
    Int tau = pow2(2 * (unsigned long)s) * Int(n - s) +
              pow2((unsigned long)s) * Int(n - s) * (p - 1) + binom(p, 3) + 2 * s;
    return {sigma, tau};
}

namespace {

// numerator of f1 with C = 0: a^2 - a + (2a+b) 2^b
Int f1_head(long a, long b) {
    return Int(a) * a - a + (2 * Int(a) + b) * pow2((unsigned long)b);
}

}  // namespace

Rat f1(const Rat& k, const Rat& c, long a, long b) {
    if (k < 0 || c < 0 || a < 0 || b < 1) throw std::invalid_argument("f1 domain violation");
    Rat num = Rat(f1_head(a, b)) - c;
    Rat den = k + Rat(Int(a) + pow2((unsigned long)b));
    return num / den;
}

Rat f2(const Rat& k, const Rat& c, long a, long b, long cc, long d) {
    if (k < 0 || c < 0 || a < 0 || b < 1 || cc < 1 || d < 1)
        throw std::invalid_argument("f2 domain violation");
    Int ax = Int(a) + pow2((unsigned long)b);
    Int cy = Int(cc) + pow2((unsigned long)d);
    Rat num = Rat(ax * f1_head(cc, d) + cy * f1_head(a, b)) - c;
    Rat den = k + Rat(ax * cy);
    return num / den;
}

LambdaCombination lambda_combination(const Rat& k, long a, long b, long c, long d) {
    if (k < 0 || a < 0 || b < 1 || c < 1 || d < 1)
        throw std::invalid_argument("lambda_combination domain violation");
    Int x = pow2((unsigned long)b), y = pow2((unsigned long)d);
    Int xy = x * y;
    Int p1 = xy - x * c - a * y - Int(c - 1) * (a - 1);
    Int p2 = x * c + a * y + Int(c - 1) * a - c;
    LambdaCombination out;
    out.lambda1 = Rat(p1) * (k + Rat(Int(a) + c + xy));
    out.lambda2 = Rat(p2) * (k + Rat(Int(a) + c - 1 + 2 * xy));
    out.combination_value = Int(c) * (c - 1) * (xy - 1) * (x + a - 1) +
                            Int(a) * (Int(a - 1) * (xy - 1) + b * xy) * (Int(c) + y - 1) +
                            Int(c) * y * x * (Int(x - 1) * d - b) +
                            y * Int(a) * d * (x * Int(c - 1) + 1) + Int(b) * x * c;
    return out;
}

double periodic_f(double x) {
    double fx = x - std::floor(x);
    return fx - std::exp2(fx);
}

double periodic_g(double x) {
    double fx = x - std::floor(x);
    double e = std::exp2(fx);
    return std::max(0.19 * e, 1.0 - 0.62 * e);
}

double periodic_g_min() {
    // one piece rises, the other falls; the minimum of the max sits at the
    // crossing 0.81 * 2^x = 1
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (0.19 * std::exp2(mid) < 1.0 - 0.62 * std::exp2(mid))
            lo = mid;
        else
            hi = mid;
    }
    return periodic_g(0.5 * (lo + hi));
}

namespace {

// 2^e for possibly negative e, exact
Rat pow2_rat(long e) {
    if (e >= 0) return Rat(pow2((unsigned long)e));
    return make_rat(Int(1), pow2((unsigned long)(-e)));
}

}  // namespace

PQValues pq_values(int k, const std::vector<Rat>& positions) {
    if (k < 0 || (int)positions.size() != k) throw std::invalid_argument("pq_values needs k positions");
    for (int i = 0; i + 1 < k; ++i)
        if (positions[i] > positions[i + 1])
            throw std::invalid_argument("positions must be nondecreasing");
    PQValues out;
    out.p = pow2_rat(-k) + 1;
    out.q = make_rat(1, 2) + pow2_rat(-k - 1);
    for (int i = 1; i <= k; ++i) {
        const Rat& ai = positions[i - 1];
        if (ai < 0 || ai > 1) throw std::invalid_argument("positions must lie in [0,1]");
        out.p += (pow2_rat(-i) - pow2_rat(i - k - 1)) * ai;
        out.q += pow2_rat(-i) * ai - (pow2_rat(-i - 1) + pow2_rat(i - k - 2)) * ai * ai;
    }
    return out;
}

std::vector<Rat> optimal_positions(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<Rat> out;
    out.reserve(k);
    for (int i = 1; i <= k; ++i) {
        long e = (long)k - 2 * i + 1;
        // 1 / (2^e + 1)
        if (e >= 0)
            out.push_back(make_rat(Int(1), pow2((unsigned long)e) + 1));
        else
            out.push_back(make_rat(pow2((unsigned long)(-e)), pow2((unsigned long)(-e)) + 1));
    }
    return out;
}

double bilateral_sum(Parity parity) {
    // center (k+1)/2 is an integer for odd k, a half-integer for even k;
    // terms decay by a factor 2 per step, window of 60 is far past 1e-15
    double center = (parity == Parity::kOdd) ? 1.0 : 0.5;
    double sum = 0.0;
    const double c = std::exp2(-1.5);
    for (int i = -60; i <= 60; ++i) {
        double u = center - (double)i;
        sum += c / (std::exp2(u) + std::exp2(-u));
    }
    return sum;
}

MuBounds max_mu_bounds(long n) {
    if (n < 2) throw std::invalid_argument("bounds need n >= 2");
    double l2 = 2.0 * std::log2((double)n);
    double lower = (double)n - l2 + periodic_f(l2);
    return {lower, lower + 2.0};
}

}  // namespace sto
