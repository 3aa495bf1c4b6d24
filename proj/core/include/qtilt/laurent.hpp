#pragma once

#include "qtilt/numeric.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qtilt {

/// Univariate Laurent polynomial over Q: an element of Q[x, x^{-1}].  Keys
/// are exponents (negative allowed); zero coefficients are never stored.
/// This ring is a principal ideal domain, which the module routines below
/// exploit.
struct LaurentPoly {
    std::map<long long, Rat> terms;

    bool is_zero() const { return terms.empty(); }

    Rat coeff(long long e) const;
    void add_term(long long e, const Rat& c);

    /// Lowest and highest exponents; throw std::domain_error on zero.
    long long min_degree() const;
    long long max_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rat& scalar);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const Rat& scalar, LaurentPoly rhs);
LaurentPoly operator-(LaurentPoly arg);

LaurentPoly laurent_monomial(long long e, Rat c = Rat(1));

/// Multiplication by x^k.
LaurentPoly shifted(const LaurentPoly& f, long long k);

/// All coefficients are integers.
bool is_integral(const LaurentPoly& f);

/// Divisibility in Q[x, x^{-1}]; zero divides only zero.
bool divides(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient b / a; throws std::domain_error unless a divides b.
LaurentPoly div_exact(const LaurentPoly& b, const LaurentPoly& a);

/// (g, s, t) with s*a + t*b = g, where g generates the ideal (a, b).  The
/// generator is normalized to a monic ordinary polynomial with nonzero
/// constant term (or zero when a = b = 0).
std::tuple<LaurentPoly, LaurentPoly, LaurentPoly> extended_gcd(const LaurentPoly& a,
                                                               const LaurentPoly& b);

std::string to_string(const LaurentPoly& f);

/// A finitely generated submodule of a free module over Q[x, x^{-1}], held as
/// an echelon basis (one pivot vector per occupied row) built by repeated
/// two-vector gcd transforms.  Rows are indexed by long long; vectors are
/// sparse.  Since the base ring is a principal ideal domain, membership can be
/// decided by successive exact division against the pivots, and every member
/// has an explicit expression over the original generators.
class LaurentModule {
public:
    using Vector = std::map<long long, LaurentPoly>;

    /// Adds a generator (zero entries may be present; they are dropped).
    void add_generator(const Vector& v);

    std::size_t generator_count() const { return generator_count_; }

    /// Decides whether target lies in the module.  On success, if combo is
    /// non-null it receives coefficients over the original generators, as a
    /// sparse map from generator index to coefficient.
    bool contains(Vector target, std::map<std::size_t, LaurentPoly>* combo = nullptr) const;

private:
    struct PivotVector {
        Vector entries;
        std::map<std::size_t, LaurentPoly> combo;
        long long pivot_row = 0;
    };

    std::vector<PivotVector> pivots_;   // ordered by pivot_row
    std::size_t generator_count_ = 0;
};

/// Rank of a matrix with entries in Q[x, x^{-1}] over the fraction field
/// Q(x), computed by fraction-free elimination.
long long rank_over_fraction_field(std::vector<std::vector<LaurentPoly>> mat);

} // namespace qtilt
