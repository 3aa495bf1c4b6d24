#pragma once

#include "qtilt/character.hpp"
#include "qtilt/numeric.hpp"

#include <map>
#include <string>
#include <tuple>

namespace qtilt {

/// Element of Z[omega, dq, d]: the coefficient ring of the recursive families
/// below.  omega is the degree-one generator, dq and d the two determinant
/// parameters.  Keys are degree triples (omega, dq, d); zero coefficients are
/// never stored.
struct ChebPoly {
    using Key = std::tuple<long long, long long, long long>;

    std::map<Key, Int> terms;

    bool is_zero() const { return terms.empty(); }

    Int coeff(long long w, long long q, long long dd) const;

    /// Adds c * omega^w * dq^q * d^dd; degrees must be non-negative.
    void add_term(long long w, long long q, long long dd, const Int& c);

    ChebPoly& operator+=(const ChebPoly& rhs);
    ChebPoly& operator-=(const ChebPoly& rhs);
    ChebPoly& operator*=(const ChebPoly& rhs);
    ChebPoly& operator*=(const Int& scalar);

    friend bool operator==(const ChebPoly&, const ChebPoly&) = default;
};

ChebPoly operator+(ChebPoly lhs, const ChebPoly& rhs);
ChebPoly operator-(ChebPoly lhs, const ChebPoly& rhs);
ChebPoly operator*(const ChebPoly& lhs, const ChebPoly& rhs);
ChebPoly operator*(const Int& scalar, ChebPoly rhs);
ChebPoly operator-(ChebPoly arg);

ChebPoly cheb_monomial(long long w, long long q, long long dd, Int c = Int(1));

/// First recursive family: P_0 = 1, P_1 = omega,
/// P_{r+1} = omega * P_r - dq * P_{r-1}.
ChebPoly cheb_p(long long r);

/// Same recursion with d in place of dq: Q_0 = 1, Q_1 = omega,
/// Q_{r+1} = omega * Q_r - d * Q_{r-1}.
ChebPoly cheb_q(long long r);

/// Dickson family over dq: g_0 = 2, g_1 = omega,
/// g_{k+1} = omega * g_k - dq * g_{k-1}.
ChebPoly dickson_g(long long k);

/// Dickson family over d: h_0 = 2, h_1 = omega,
/// h_{k+1} = omega * h_k - d * h_{k-1}.
ChebPoly dickson_h(long long k);

/// Substitution d -> d^k (k >= 1).  The band relation at classical layer i
/// uses the layer's own determinant, which is the p^i-th power of d.
ChebPoly scale_d_degrees(const ChebPoly& f, long long k);

/// Formal derivative with respect to omega.
ChebPoly omega_derivative(const ChebPoly& f);

/// Degree in omega; -1 for the zero polynomial.
long long omega_degree(const ChebPoly& f);

/// Coefficient of omega^k: a polynomial in dq and d alone.
ChebPoly omega_coefficient(const ChebPoly& f, long long k);

/// Substitution omega -> value (an integer), leaving dq and d untouched.
ChebPoly substitute_omega_int(const ChebPoly& f, long long value);

/// Torus realization omega -> t1 + t2, dq -> t1*t2, d -> (t1*t2)^ell.  Under
/// this map P_r becomes the Weyl character of (r, 0).
Character substitute_torus(const ChebPoly& f, long long ell);

/// Squarefreeness as a polynomial in omega over the fraction field of
/// Z[dq, d], decided by a fraction-free pseudo-remainder sequence for
/// gcd(f, df/domega).  Constants count as squarefree.
bool squarefree_in_omega(const ChebPoly& f);

std::string to_string(const ChebPoly& f);

} // namespace qtilt
