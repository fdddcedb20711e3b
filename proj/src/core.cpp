#include "planargen/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace planargen {

void bern_range_error(double p) {
    throw ParameterError("bern: probability out of range: " + std::to_string(p));
}

double exp_geq(int d, double lambda) {
    if (d <= 0)
        return std::exp(lambda);
    // direct tail sum avoids the cancellation in exp(l) - partial sum
    double term = 1.0;
    for (int k = 1; k <= d; ++k)
        term *= lambda / k;
    double sum = 0.0;
    for (int k = d; k < d + 10000; ++k) {
        sum += term;
        term *= lambda / (k + 1);
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

int pois_geq(int d, double lambda, RandomSource& rng) {
    if (d < 0)
        throw ParameterError("pois_geq: negative threshold");
    if (!(lambda >= 0.0))
        throw ParameterError("pois_geq: negative lambda");
    if (lambda == 0.0) {
        if (d == 0)
            return 0;
        throw ParameterError("pois_geq: lambda must be positive when d >= 1");
    }
    double p = 1.0;
    for (int k = 1; k <= d; ++k)
        p *= lambda / k;
    p /= exp_geq(d, lambda);
    double u = rng.uniform();
    double cum = p;
    int k = d;
    const int limit = d + static_cast<int>(10.0 * (lambda + 50.0));
    while (u >= cum) {
        ++k;
        if (k > limit)
            throw NumericError("pois_geq: cumulative probability did not reach the uniform draw");
        p *= lambda / k;
        cum += p;
    }
    return k;
}

std::vector<int> distribute_labels(int r, RandomSource& rng) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(r, 0)));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

int pick(std::initializer_list<double> weights, RandomSource& rng) {
    double total = 0;
    int last = -1, i = 0;
    for (double w : weights) {
        if (w > 0)
            last = i;
        total += w;
        ++i;
    }
    if (last < 0)
        throw ParameterError("pick: all weights are zero");
    double u = rng.uniform() * total;
    i = 0;
    for (double w : weights) {
        if (u < w)
            return i;
        u -= w;
        ++i;
    }
    return last;
}

}  // namespace planargen
