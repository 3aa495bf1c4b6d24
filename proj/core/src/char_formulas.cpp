#include "qtilt/char_formulas.hpp"

#include <iterator>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qtilt {

namespace {

// Reflection step used by both closed pi-region formulas: the weight
// w - (r+1)*(1,-1) paired with w when diff(w) = m + r.
Weight reflected_partner(Weight w, long long modulus) {
    const long long r = diff(w) - modulus;
    return {w.a - (r + 1), w.b + (r + 1)};
}

// Tilting character of (d, 0) for the single-modulus tower; determinant
// twists are applied by the public wrapper.
Character tower_character(long long d, long long modulus) {
    static std::mutex guard;
    static std::map<std::pair<long long, long long>, Character> cache;
    {
        const std::lock_guard<std::mutex> lock(guard);
        if (const auto it = cache.find({modulus, d}); it != cache.end()) {
            return it->second;
        }
    }

    const Weight w0{d, 0};
    Character ch;
    if (in_pi(w0, modulus)) {
        ch = tilting_character_in_pi(w0, modulus);
    } else {
        const RegionSplit split = split_outside(w0, modulus);
        ch = tilting_character_in_pi(split.core, modulus)
            * frobenius_scale_character(tilting_character(split.carry, modulus), modulus);
    }

    const std::lock_guard<std::mutex> lock(guard);
    return cache.emplace(std::pair{modulus, d}, std::move(ch)).first->second;
}

// Tilting character of (d, 0) for the quantum tower.
Character quantum_tower_character(long long d, const Params& params) {
    static std::mutex guard;
    static std::map<std::tuple<long long, long long, long long>, Character> cache;
    const std::tuple key{params.ell, params.p, d};
    {
        const std::lock_guard<std::mutex> lock(guard);
        if (const auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }

    const Weight w0{d, 0};
    Character ch;
    if (in_pi(w0, params.ell)) {
        ch = tilting_character_in_pi(w0, params.ell);
    } else {
        const RegionSplit split = split_outside(w0, params.ell);
        ch = tilting_character_in_pi(split.core, params.ell)
            * frobenius_scale_character(tilting_character(split.carry, params.p), params.ell);
    }

    const std::lock_guard<std::mutex> lock(guard);
    return cache.emplace(key, std::move(ch)).first->second;
}

} // namespace

Character frobenius_scale_character(const Character& ch, long long k) {
    if (k < 1) {
        throw std::invalid_argument("frobenius_scale_character: k must be positive");
    }
    if (k == 1) {
        return ch;
    }
    Character out;
    for (const auto& [e, c] : ch.terms) {
        out.terms.emplace(Character::Exponent{e.first * k, e.second * k}, c);
    }
    return out;
}

Character simple_character_in_pi(Weight w, long long modulus) {
    switch (region(w, modulus)) {
    case Region::restricted:
        return weyl_character(w);
    case Region::band:
        return weyl_character(w) - weyl_character(reflected_partner(w, modulus));
    case Region::outside:
        break;
    }
    throw std::domain_error("simple_character_in_pi: " + to_string(w) + " is outside the pi-region");
}

Character tilting_character_in_pi(Weight w, long long modulus) {
    switch (region(w, modulus)) {
    case Region::restricted:
        return weyl_character(w);
    case Region::band:
        return weyl_character(w) + weyl_character(reflected_partner(w, modulus));
    case Region::outside:
        break;
    }
    throw std::domain_error("tilting_character_in_pi: " + to_string(w) + " is outside the pi-region");
}

Character tilting_character(Weight w, long long modulus) {
    if (!is_dominant(w)) {
        throw std::invalid_argument("tilting_character: weight must be dominant");
    }
    return det_shift(tower_character(diff(w), modulus), w.b);
}

Character tilting_character(Weight w, const Params& params) {
    validate(params);
    if (!is_dominant(w)) {
        throw std::invalid_argument("tilting_character: weight must be dominant");
    }
    return det_shift(quantum_tower_character(diff(w), params), w.b);
}

Character simple_character(Weight w, const Params& params) {
    validate(params);
    const TwistLabel factors = steinberg_factorize(w, params);
    Character ch = simple_character_in_pi(factors.qlevel, params.ell);
    long long scale = params.ell;
    for (const auto& u : factors.levels) {
        ch *= frobenius_scale_character(simple_character_in_pi(u, params.p), scale);
        scale *= params.p;
    }
    return ch;
}

Character label_character(const TwistLabel& lbl, const Params& params) {
    validate(params);
    Character ch = tilting_character(lbl.qlevel, params);
    long long scale = params.ell;
    for (const auto& u : lbl.levels) {
        ch *= frobenius_scale_character(tilting_character(u, params.p), scale);
        scale *= params.p;
    }
    return ch;
}

std::map<Weight, Int> decompose_into_tiltings(Character ch, const TiltingCharacters& tilt) {
    std::map<Weight, Int> out;
    while (!ch.is_zero()) {
        auto best = ch.terms.begin();
        for (auto it = std::next(ch.terms.begin()); it != ch.terms.end(); ++it) {
            const long long d = it->first.first - it->first.second;
            const long long bd = best->first.first - best->first.second;
            if (d > bd || (d == bd && it->first.second > best->first.second)) {
                best = it;
            }
        }
        const Weight w{best->first.first, best->first.second};
        const Int mult = best->second;
        if (!is_dominant(w)) {
            throw std::domain_error(
                "decompose_into_tiltings: leading exponent " + to_string(w) + " is not dominant");
        }
        if (mult < 0) {
            throw std::domain_error(
                "decompose_into_tiltings: negative multiplicity at " + to_string(w));
        }
        ch -= mult * tilt(w);
        out[w] += mult;
    }
    return out;
}

std::map<Weight, Int> decompose_tiltings(const Character& ch, long long modulus) {
    return decompose_into_tiltings(
        ch, [modulus](Weight w) { return tilting_character(w, modulus); });
}

std::map<Weight, Int> decompose_tiltings(const Character& ch, const Params& params) {
    return decompose_into_tiltings(
        ch, [&params](Weight w) { return tilting_character(w, params); });
}

} // namespace qtilt
