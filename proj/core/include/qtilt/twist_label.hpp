#pragma once

#include "qtilt/weight.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qtilt {

/// A twist label (u[-1]; u[0], ..., u[m]): one weight for the quantum layer
/// followed by one weight per classical Frobenius layer.  Layer i >= 0 lives
/// at scale ell * p^i in the ambient torus.  Trailing zero layers are never
/// stored; an empty `levels` vector means the label is purely quantum.
struct TwistLabel {
    Weight qlevel;
    std::vector<Weight> levels;

    friend auto operator<=>(const TwistLabel&, const TwistLabel&) = default;
};

/// Index of the last classical layer, or -1 when there is none.
inline long long height(const TwistLabel& lbl) {
    return static_cast<long long>(lbl.levels.size()) - 1;
}

bool all_dominant(const TwistLabel& lbl);

/// Length of a label: length(u[-1]) + ell * sum_i p^i * length(u[i]).
long long length_label(const TwistLabel& lbl, const Params& params);

/// Every layer sits inside its pi-region: diff(u[-1]) <= 2*ell-2 and
/// diff(u[i]) <= 2*p-2 for all classical layers.
bool is_special(const TwistLabel& lbl, const Params& params);

/// Rewrites the determinant coordinates into the canonical mixed-radix form
/// using the carrying identities det_q^ell = det^F and det^p = det^Fbar:
/// the quantum det digit lands in [0, ell-1], classical digits in [0, p-1],
/// carrying greedily upward (which may extend the label by pure-determinant
/// layers).  A negative total determinant power leaves a single negative
/// digit on the topmost layer, so transient inverse-determinant classes have
/// canonical names too.  Trailing zero layers are trimmed.  Idempotent, and
/// preserves both the recomposed weight and the character of the class.
TwistLabel canonicalize_label(const TwistLabel& lbl, const Params& params);

/// Base-(ell, p, p, ...) digits of a dominant weight: the unique canonical
/// label whose layers are restricted (diff(u[-1]) < ell, diff(u[i]) < p) and
/// which recomposes to w.  This is the tensor factorization of the simple
/// module with highest weight w into Frobenius layers.
TwistLabel steinberg_factorize(Weight w, const Params& params);

/// u[-1] + ell * sum_i p^i * u[i], the inverse of steinberg_factorize.
Weight recompose(const TwistLabel& lbl, const Params& params);

/// Splits a label into its diff-only skeleton (all determinant digits zero)
/// and the total determinant power  b[-1] + ell * sum_i p^i * b[i].
/// Canonical labels are in bijection with (skeleton, power) pairs.
std::pair<TwistLabel, long long> det_split(const TwistLabel& lbl, const Params& params);

std::string to_string(const TwistLabel& lbl);

} // namespace qtilt
