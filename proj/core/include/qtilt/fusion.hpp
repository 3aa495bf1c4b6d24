#pragma once

#include "qtilt/char_formulas.hpp"
#include "qtilt/character.hpp"
#include "qtilt/numeric.hpp"
#include "qtilt/twist_label.hpp"
#include "qtilt/weight.hpp"

#include <map>
#include <vector>

namespace qtilt {

/// An integral combination of canonical labels: an element of the free
/// abelian group on module classes.  Multiplicities are exact integers and
/// zero entries are never stored.
struct ClassVector {
    std::map<TwistLabel, Int> summands;

    friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// dst += scale * src, dropping entries that cancel.
void add_scaled(ClassVector& dst, const ClassVector& src, const Int& scale);

/// Sum of label characters weighted by multiplicity.
Character class_vector_character(const ClassVector& v, const Params& params);

/// The label names an indecomposable tilting module: every layer below the
/// topmost one lies in the band at its modulus (quantum layer at ell,
/// classical layers at p); the top layer is unconstrained.  A label with no
/// classical layers therefore always qualifies.
bool is_tilting_label(const TwistLabel& lbl, const Params& params);

/// The label names a simple module: every layer is restricted
/// (diff(u[-1]) <= ell-1 and diff(u[i]) <= p-1), so the label is the
/// factorization of the simple with its recomposed highest weight.
bool is_simple_label(const TwistLabel& lbl, const Params& params);

/// One layer of the modular Clebsch-Gordan rule.  For restricted factors the
/// classical rule lists the weights (a+b-i+r, i+r) for 0 <= i <= min(a, b)
/// with a = diff(w1), b = diff(w2), r = w1.b + w2.b; every listed weight whose
/// diff reaches the modulus then strikes its reflection partner off the list.
/// Weights are stored with the determinant twist r already applied.
struct StrikeOutTrace {
    std::vector<Weight> listed;
    std::vector<Weight> struck;
    std::vector<Weight> survivors;
    long long det_power = 0;
};

/// Throws std::invalid_argument unless both weights are restricted at the
/// modulus.
StrikeOutTrace strike_out(Weight w1, Weight w2, long long modulus);

/// Full layer-by-layer record of a product of two simple modules: both
/// factorizations, one strike-out per layer (index 0 is the quantum layer),
/// and the assembled result.
struct SimpleTensorTrace {
    TwistLabel left;
    TwistLabel right;
    std::vector<StrikeOutTrace> layers;
    ClassVector result;
};

/// Decomposition of L(w1) (x) L(w2) into classes of twisted tilting modules,
/// computed layerwise through the strike-out rule on both factorizations.
SimpleTensorTrace simple_tensor_simple_trace(Weight w1, Weight w2, const Params& params);
ClassVector simple_tensor_simple(Weight w1, Weight w2, const Params& params);

/// Expands a formal product of labels into the canonical special basis.  The
/// cascade runs one layer at a time from the quantum layer upward: the tower
/// characters of all factors meeting at a layer are multiplied and decomposed
/// back into indecomposable tilting characters; a resulting weight inside the
/// pi-region becomes that layer of an output label, while one beyond it
/// splits into its band core and a carry that joins the next layer up.  An
/// empty factor list yields the unit class.
ClassVector normalize_product(const std::vector<TwistLabel>& factors, const Params& params);

/// Canonical special-basis expansion of a single class, i.e.
/// normalize_product({lbl}).
ClassVector donkin_normalize(const TwistLabel& lbl, const Params& params);

/// Bilinear product of class vectors in the representation ring.
ClassVector multiply(const ClassVector& x, const ClassVector& y, const Params& params);

} // namespace qtilt
