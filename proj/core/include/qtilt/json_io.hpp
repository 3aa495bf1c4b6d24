#pragma once

#include "qtilt/character.hpp"
#include "qtilt/chebyshev.hpp"
#include "qtilt/fusion.hpp"
#include "qtilt/numeric.hpp"
#include "qtilt/twist_label.hpp"
#include "qtilt/weight.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

namespace qtilt {

/// All serialization uses key-order-preserving JSON so that output is
/// byte-deterministic.
using Json = nlohmann::ordered_json;

/// Arbitrary-precision coefficients serialize as JSON numbers while they fit
/// in 64 bits and as decimal strings beyond that; parsing accepts both.
Json coeff_to_json(const Int& c);
Int coeff_from_json(const Json& j);

/// Weight <-> [a, b].
Json weight_to_json(Weight w);
Weight weight_from_json(const Json& j);

/// Label <-> {"qlevel": [a, b], "levels": [[a0, b0], ...]}.
Json label_to_json(const TwistLabel& lbl);
TwistLabel label_from_json(const Json& j);

/// Character <-> lexicographically sorted [i, j, coeff] triples.
Json character_to_json(const Character& ch);
Character character_from_json(const Json& j);

/// Class vector <-> {"summands": [{"label":..., "mult":..., "tilting":...,
/// "simple":...}, ...], "params": {"l":..., "p":...}}; the two flags are
/// derived from the label on output and ignored on input.
Json class_vector_to_json(const ClassVector& v, const Params& params);
std::pair<ClassVector, Params> class_vector_from_json(const Json& j);

/// Chebyshev-ring element <-> sorted [omega, dq, d, coeff] quadruples.
Json cheb_to_json(const ChebPoly& f);
ChebPoly cheb_from_json(const Json& j);

/// Command-line weight syntax "a,b".
Weight parse_weight(const std::string& text);

/// Command-line label syntax "a,b;a0,b0;...": quantum layer first, classical
/// layers after, separated by semicolons.
TwistLabel parse_label(const std::string& text);

}  // namespace qtilt
