#pragma once

#include <compare>
#include <string>

namespace qtilt {

/// Ambient parameters of the whole tower: the quantum parameter is a primitive
/// ell-th root of unity (ell >= 2) over a base field of characteristic p, with
/// p prime and coprime to ell.
struct Params {
    long long ell = 2;
    long long p = 3;

    friend auto operator<=>(const Params&, const Params&) = default;
};

/// Throws std::invalid_argument unless ell >= 2, p is prime and gcd(ell, p) = 1.
void validate(const Params& params);

/// A weight (a, b) of the rank-two torus, written in the standard coordinates.
/// Dominant means a >= b; both entries may be negative.
struct Weight {
    long long a = 0;
    long long b = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(Weight lhs, Weight rhs) { return {lhs.a + rhs.a, lhs.b + rhs.b}; }

/// Root-direction gap a - b; non-negative exactly on dominant weights.
inline long long diff(Weight w) { return w.a - w.b; }

inline bool is_dominant(Weight w) { return w.a >= w.b; }

/// Length of a dominant weight: its pairing with the coroot, i.e. a - b.
long long length_weight(Weight w);

/// Alcove-style position of a dominant weight relative to a modulus m:
///   restricted  diff <= m-1
///   band        m-1 < diff <= 2m-2   (the closure overlaps restricted in diff = m-1)
///   outside     diff > 2m-2
enum class Region { restricted, band, outside };

Region region(Weight w, long long modulus);

/// diff <= 2m-2: the union of the restricted region and the band.
bool in_pi(Weight w, long long modulus);

/// m-1 <= diff <= 2m-2.
bool in_band(Weight w, long long modulus);

/// Coordinate dilation by k >= 1: the highest weight of a Frobenius-scaled line.
Weight frobenius_scale(Weight w, long long k);

/// Self-similar splitting of a dominant weight outside the pi-region at
/// modulus m: the unique pair with  w = core + m * carry  where the core lies
/// in the band (m-1 <= diff(core) <= 2m-2, 0 <= core.b <= m-1) and the carry
/// is dominant with diff(carry) >= 1.
struct RegionSplit {
    Weight core;
    Weight carry;
};

/// Throws std::domain_error when w is not in the outside region.
RegionSplit split_outside(Weight w, long long modulus);

std::string to_string(Weight w);

} // namespace qtilt
