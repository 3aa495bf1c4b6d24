#include "qtilt/weight.hpp"

#include "qtilt/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace qtilt {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

void validate(const Params& params) {
    if (params.ell < 2)
        throw std::invalid_argument("params: ell must be at least 2");
    if (!is_prime(params.p))
        throw std::invalid_argument("params: p must be prime");
    if (std::gcd(params.ell, params.p) != 1)
        throw std::invalid_argument("params: ell and p must be coprime");
}

long long length_weight(Weight w) {
    if (!is_dominant(w))
        throw std::invalid_argument("length_weight: weight is not dominant");
    return diff(w);
}

Region region(Weight w, long long modulus) {
    if (modulus < 2)
        throw std::invalid_argument("region: modulus must be at least 2");
    if (!is_dominant(w))
        throw std::invalid_argument("region: weight is not dominant");
    const long long d = diff(w);
    if (d <= modulus - 1) return Region::restricted;
    if (d <= 2 * modulus - 2) return Region::band;
    return Region::outside;
}

bool in_pi(Weight w, long long modulus) {
    return is_dominant(w) && diff(w) <= 2 * modulus - 2;
}

bool in_band(Weight w, long long modulus) {
    return is_dominant(w) && diff(w) >= modulus - 1 && diff(w) <= 2 * modulus - 2;
}

Weight frobenius_scale(Weight w, long long k) {
    if (k < 1)
        throw std::invalid_argument("frobenius_scale: k must be positive");
    return {w.a * k, w.b * k};
}

RegionSplit split_outside(Weight w, long long modulus) {
    if (region(w, modulus) != Region::outside)
        throw std::domain_error("split_outside: weight is not in the outside region");
    const long long m = modulus;
    const long long excess = diff(w) - (m - 1);
    const long long nu = floor_mod(excess, m);
    const long long c = floor_mod(w.b, m);
    const Weight core{m - 1 + nu + c, c};
    const Weight carry{(w.a - core.a) / m, (w.b - c) / m};
    return {core, carry};
}

std::string to_string(Weight w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

} // namespace qtilt
