// Mixed Boltzmann machinery: random source, primitive laws, rejection,
// L/U re-rooting and the final labelling step.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planargen {

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GiveUp : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown by builders once a generation exceeds the caller's size cap.
struct SizeAbort {};

inline constexpr std::uint64_t default_flip_cap = 1000000000ULL;

struct SizeCounters {
    std::uint64_t l_size = 0;
    std::uint64_t u_size = 0;
    std::uint64_t primitive_ops = 0;
};

class RandomSource {
public:
    using result_type = std::uint64_t;

    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    result_type operator()() {
        tick();
        return engine_();
    }

    // uniform in [0,1)
    double uniform() {
        tick();
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(*this);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t flips() const { return flips_; }
    // node and edge creations, reported with flips as primitive operations
    void add_ops(std::uint64_t k) { ops_ += k; }
    std::uint64_t primitive_ops() const { return ops_ + total_flips_ + flips_; }
    void set_flip_cap(std::uint64_t cap) { cap_ = cap; }
    std::uint64_t flip_cap() const { return cap_; }
    // starts a new top-level generation budget
    void reset_budget() {
        total_flips_ += flips_;
        flips_ = 0;
    }

private:
    void tick() {
        if (++flips_ > cap_)
            throw GiveUp("coin-flip budget exhausted (" + std::to_string(cap_) + ")");
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t flips_ = 0;
    std::uint64_t total_flips_ = 0;
    std::uint64_t ops_ = 0;
    std::uint64_t cap_ = default_flip_cap;
};

[[noreturn]] void bern_range_error(double p);

inline bool bern(double p, RandomSource& rng) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) [[unlikely]]
        bern_range_error(p);
    return rng.uniform() < p;
}

// k >= d with probability lambda^k / (k! exp_{>=d}(lambda))
int pois_geq(int d, double lambda, RandomSource& rng);

// exp_{>=d}(lambda) = sum_{k>=d} lambda^k / k!
double exp_geq(int d, double lambda);

std::vector<int> distribute_labels(int r, RandomSource& rng);

// index i with probability weights[i] / sum(weights), from one uniform draw
int pick(std::initializer_list<double> weights, RandomSource& rng);

template <class Gen, class Prob>
auto reject_filter(Gen&& gen, Prob&& p, RandomSource& rng,
                   std::uint64_t cap = default_flip_cap) {
    for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
        auto obj = gen();
        if (bern(p(obj), rng))
            return obj;
    }
    throw GiveUp("reject_filter: attempt cap exceeded");
}

// restore(obj) puts the discarded L-atom back and returns {|g|, ||g||};
// discard(obj) removes a uniformly chosen U-atom.
template <class Gen, class Restore, class Discard>
auto l_to_u(Gen&& gen_derived, double alpha_ul, RandomSource& rng,
            Restore&& restore, Discard&& discard,
            std::uint64_t cap = default_flip_cap) {
    for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
        auto obj = gen_derived();
        auto [l, u] = restore(obj);
        double p = static_cast<double>(u) / (alpha_ul * static_cast<double>(l));
        if (p > 1.0 + 1e-12)
            throw InvariantViolation("l_to_u: acceptance above 1, alpha_ul too small");
        if (bern(std::min(p, 1.0), rng)) {
            discard(obj);
            return obj;
        }
    }
    throw GiveUp("l_to_u: attempt cap exceeded");
}

// restore(obj) puts the discarded U-atom back and returns {|g|, ||g||};
// discard(obj) distinguishes a uniformly chosen L-atom.
template <class Gen, class Restore, class Discard>
auto u_to_l(Gen&& gen_uderived, double alpha_lu, RandomSource& rng,
            Restore&& restore, Discard&& discard,
            std::uint64_t cap = default_flip_cap) {
    for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
        auto obj = gen_uderived();
        auto [l, u] = restore(obj);
        if (l == 0)
            continue;
        double p = static_cast<double>(l) / (alpha_lu * static_cast<double>(u));
        if (p > 1.0 + 1e-12)
            throw InvariantViolation("u_to_l: acceptance above 1, alpha_lu too small");
        if (bern(std::min(p, 1.0), rng)) {
            discard(obj);
            return obj;
        }
    }
    throw GiveUp("u_to_l: attempt cap exceeded");
}

}  // namespace planargen
