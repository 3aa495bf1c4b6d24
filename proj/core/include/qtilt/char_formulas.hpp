#pragma once

#include "qtilt/character.hpp"
#include "qtilt/twist_label.hpp"
#include "qtilt/weight.hpp"

#include <functional>
#include <map>

namespace qtilt {

/// Exponent dilation t_i -> t_i^k (k >= 1): the character of a module pulled
/// back along a k-fold Frobenius-style scaling.
Character frobenius_scale_character(const Character& ch, long long k);

/// Character of the simple module with highest weight w in the pi-region at
/// modulus m: the Weyl character chi(w) when diff(w) <= m-1, and
/// chi(w) - chi(w - (r+1)*(1,-1)) when diff(w) = m + r with 0 <= r <= m-2.
/// Throws std::domain_error outside the pi-region.
Character simple_character_in_pi(Weight w, long long modulus);

/// Character of the indecomposable tilting module with highest weight w in
/// the pi-region: chi(w) when restricted, chi(w) + chi(w - (r+1)*(1,-1)) on
/// the band.  Throws std::domain_error outside the pi-region.
Character tilting_character_in_pi(Weight w, long long modulus);

/// Tilting character at a single modulus, defined for every dominant weight
/// by the self-similar rule beyond the pi-region:
///   ch T(w) = ch T(core) * F_m(ch T(carry)),   w = core + m * carry.
/// For prime m this is the tilting character of the classical group in
/// characteristic m.  Memoized; safe to call concurrently.
Character tilting_character(Weight w, long long modulus);

/// Tilting character of the quantum group at the full parameter pair.  Inside
/// the pi-region at ell it agrees with tilting_character_in_pi; beyond, the
/// core splits off at ell and the carry continues through the classical
/// tower in characteristic p:
///   ch T(w) = ch T(core) * F_ell(tilting_character(carry, p)).
/// Memoized; safe to call concurrently.
Character tilting_character(Weight w, const Params& params);

/// Character of the simple module with highest weight w at the full parameter
/// pair: the product over the layers of its factorization of the layer's
/// simple character, dilated to its scale.
Character simple_character(Weight w, const Params& params);

/// Character of the module class a label names: the quantum tilting character
/// of the quantum layer times the p-tower tilting characters of the classical
/// layers, each dilated to its scale ell * p^i.
Character label_character(const TwistLabel& lbl, const Params& params);

/// Callback producing the tilting character of a dominant weight.
using TiltingCharacters = std::function<Character(Weight)>;

/// Greedy unitriangular decomposition of a character as a nonnegative integral
/// combination of the supplied tilting characters.  Each step strips the
/// maximal exponent under the order (larger diff first, then larger second
/// coordinate); the tilting character of that weight occurs with leading
/// coefficient one, so the multiplicity is forced.  Throws std::domain_error
/// when the input is not such a combination (negative multiplicity, or a
/// maximal exponent that is not dominant).
std::map<Weight, Int> decompose_into_tiltings(Character ch, const TiltingCharacters& tilt);

/// decompose_into_tiltings against the single-modulus tower.
std::map<Weight, Int> decompose_tiltings(const Character& ch, long long modulus);

/// decompose_into_tiltings against the quantum tower.
std::map<Weight, Int> decompose_tiltings(const Character& ch, const Params& params);

} // namespace qtilt
