#pragma once

#include "qtilt/numeric.hpp"
#include "qtilt/weight.hpp"

#include <map>
#include <string>
#include <utility>

namespace qtilt {

/// An element of Z[t1^{+-1}, t2^{+-1}], the character ring of the diagonal
/// torus.  Keys are exponent pairs (i, j) of the monomial t1^i * t2^j; zero
/// coefficients are never stored, so equality is plain map equality.
struct Character {
    using Exponent = std::pair<long long, long long>;

    std::map<Exponent, Int> terms;

    bool is_zero() const { return terms.empty(); }

    /// Coefficient of t1^i * t2^j (zero when absent).
    Int coeff(long long i, long long j) const;

    /// Adds c * t1^i * t2^j, dropping the entry if it cancels to zero.
    void add_term(long long i, long long j, const Int& c);

    Character& operator+=(const Character& rhs);
    Character& operator-=(const Character& rhs);
    Character& operator*=(const Character& rhs);
    Character& operator*=(const Int& scalar);

    friend bool operator==(const Character&, const Character&) = default;
};

Character operator+(Character lhs, const Character& rhs);
Character operator-(Character lhs, const Character& rhs);
Character operator*(const Character& lhs, const Character& rhs);
Character operator*(const Int& scalar, Character rhs);
Character operator-(Character arg);

/// c * t1^i * t2^j as a one-term character.
Character monomial_character(long long i, long long j, Int c = Int(1));

/// Weyl character of the dominant weight (a, b):
/// sum over 0 <= i <= a-b of t1^(a-i) * t2^(b+i).
Character weyl_character(Weight w);

/// Multiplication by (t1*t2)^k, the k-th determinant twist.
Character det_shift(const Character& ch, long long k);

/// Invariance under swapping t1 and t2 (the Weyl group action).
bool is_w_symmetric(const Character& ch);

/// Evaluation at t1 = t2 = 1, i.e. the dimension of a module with this
/// character.
Int dimension(const Character& ch);

std::string to_string(const Character& ch);

} // namespace qtilt
