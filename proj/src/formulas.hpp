#pragma once

#include <vector>

#include "counts.hpp"
#include "numbers.hpp"

namespace sto {

// local mean subtree order at the handle end of a broom with handle length a
// and b leaves: n - (b + a*n/(a + 2^b))/2, exact
Rat broom_local_mean(long n, long a, long b);

// sigma/tau of the balanced double-broom: path of n-2s vertices with s leaves
// at each end
Aggregate double_broom_counts(long n, long s);

// the two rational functions compared when merging two brooms into one
Rat f1(const Rat& k, const Rat& c, long a, long b);
Rat f2(const Rat& k, const Rat& c, long a, long b, long cc, long d);

struct LambdaCombination {
    Rat lambda1;            // >= 0 when 2^b >= 3a and 2^d >= 3c
    Rat lambda2;            // > 0 on the whole domain
    Int combination_value;  // lambda1*Delta1 + lambda2*Delta2, independent of k and C
};

LambdaCombination lambda_combination(const Rat& k, long a, long b, long c, long d);

// 1-periodic extensions evaluated on the fractional part
double periodic_f(double x);  // x - 2^x on [0,1]
double periodic_g(double x);  // max(0.19*2^x, 1 - 0.62*2^x) on [0,1]

// minimum of periodic_g over one period (the crossing of its two pieces)
double periodic_g_min();

struct PQValues {
    Rat p;
    Rat q;
};

// the bounded coefficient functions of the support-leaf caterpillar expansion
PQValues pq_values(int k, const std::vector<Rat>& positions);

// argmax positions of q - p: a_i = 1/(2^(k-2i+1) + 1)
std::vector<Rat> optimal_positions(int k);

enum class Parity { kEven, kOdd };

// sum over all integers i of 2^(-3/2) / (2^((k+1)/2-i) + 2^(i-(k+1)/2));
// depends only on the parity of k
double bilateral_sum(Parity parity);

struct MuBounds {
    double lower;  // n - 2 log2 n + f(2 log2 n)
    double upper;  // lower + 2
};

// asymptotic bracket for the maximum mean subtree order at order n
MuBounds max_mu_bounds(long n);

}  // namespace sto
