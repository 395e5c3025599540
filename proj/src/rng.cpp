#include "hyperphase/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hyperphase {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    u128 m = static_cast<u128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(next_u64()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::binomial(std::uint64_t trials, double p) {
    if (trials == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    if (p > 0.5) return trials - binomial(trials, 1.0 - p);

    const double nd = static_cast<double>(trials);
    const double mean = nd * p;
    constexpr double kTwo53 = 9007199254740992.0;
    if (nd > kTwo53 || mean > 1e7) {
        const double sd = std::sqrt(mean * (1.0 - p));
        const double x = std::floor(mean + sd * normal() + 0.5);
        return static_cast<std::uint64_t>(std::clamp(x, 0.0, nd));
    }

    // Inversion anchored at the mode. F(mode) is summed downwards until the
    // terms stop contributing, then the uniform is located by walking down
    // or up with the pmf ratio recurrence.
    const double q = 1.0 - p;
    const double odds = p / q;
    const auto mode = static_cast<std::uint64_t>(std::floor((nd + 1.0) * p));
    const double md = static_cast<double>(mode);
    const double log_pmf_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                                std::lgamma(nd - md + 1.0) + md * std::log(p) +
                                (nd - md) * std::log1p(-p);
    const double pmf_mode = std::exp(log_pmf_mode);

    double cdf_mode = pmf_mode;
    {
        double term = pmf_mode;
        for (std::uint64_t x = mode; x > 0; --x) {
            term *= static_cast<double>(x) / (static_cast<double>(trials - x + 1) * odds);
            cdf_mode += term;
            if (term < cdf_mode * 1e-18) break;
        }
    }

    const double u = uniform01();
    std::uint64_t x = mode;
    double pmf = pmf_mode;
    double cdf = cdf_mode;
    if (u < cdf_mode) {
        // Want the smallest x with F(x) > u.
        while (x > 0 && cdf - pmf > u) {
            cdf -= pmf;
            pmf *= static_cast<double>(x) / (static_cast<double>(trials - x + 1) * odds);
            --x;
        }
        return x;
    }
    while (cdf <= u && x < trials) {
        pmf *= static_cast<double>(trials - x) / static_cast<double>(x + 1) * odds;
        ++x;
        cdf += pmf;
        if (pmf == 0.0) break;
    }
    return x;
}

}  // namespace hyperphase
