#pragma once

#include "qtilt/chebyshev.hpp"
#include "qtilt/fusion.hpp"
#include "qtilt/laurent.hpp"
#include "qtilt/numeric.hpp"
#include "qtilt/twist_label.hpp"
#include "qtilt/weight.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtilt {

/// Element of the polynomial ring Z[dq^{+-1}, d^{+-1}][X_{-1}, X_0, ..., X_n].
///
/// `arity` is the number of X variables (n + 2); index 0 is the quantum
/// generator X_{-1} and index i+1 is the classical generator X_i.  The X
/// exponents are non-negative; the two determinant variables are Laurent.
struct PresentationPoly {
    struct Key {
        std::vector<long long> xs;
        long long dq = 0;
        long long d = 0;

        auto operator<=>(const Key&) const = default;
    };

    std::size_t arity = 0;
    std::map<Key, Int> terms;

    explicit PresentationPoly(std::size_t arity_ = 0) : arity(arity_) {}

    bool is_zero() const { return terms.empty(); }

    /// Adds c * X^xs * dq^dq_pow * d^d_pow, erasing the term if it cancels.
    /// Throws std::invalid_argument if xs has the wrong length or a negative
    /// exponent.
    void add_term(std::vector<long long> xs, long long dq_pow, long long d_pow, Int c);

    PresentationPoly& operator+=(const PresentationPoly& other);
    PresentationPoly& operator-=(const PresentationPoly& other);
    PresentationPoly& operator*=(const PresentationPoly& other);

    friend PresentationPoly operator+(PresentationPoly a, const PresentationPoly& b) {
        a += b;
        return a;
    }
    friend PresentationPoly operator-(PresentationPoly a, const PresentationPoly& b) {
        a -= b;
        return a;
    }
    friend PresentationPoly operator*(PresentationPoly a, const PresentationPoly& b) {
        a *= b;
        return a;
    }
    friend bool operator==(const PresentationPoly& a, const PresentationPoly& b) {
        return a.arity == b.arity && a.terms == b.terms;
    }

    std::string to_string() const;
};

/// The i-th X variable as a polynomial of the given arity.
PresentationPoly presentation_variable(std::size_t arity, std::size_t index);

/// The constant c * dq^dq_pow * d^d_pow of the given arity.
PresentationPoly presentation_constant(std::size_t arity, long long dq_pow,
                                       long long d_pow, Int c);

/// Reads a one-variable Chebyshev-ring element as a polynomial in X_{var}:
/// omega maps to the chosen variable, dq and d pass through.
PresentationPoly inject_cheb(const ChebPoly& f, std::size_t arity, std::size_t var);

/// Partial derivative with respect to the X variable of the given index.
PresentationPoly derivative_x(const PresentationPoly& f, std::size_t index);

/// Evaluation at rational arguments (xs for the X variables, then dq and d;
/// dq and d must be nonzero when negative powers occur).
Rat evaluate_poly(const PresentationPoly& f, const std::vector<Rat>& xs,
                  const Rat& dq, const Rat& d);

/// The defining relations of the level-n presentation, in the order: the
/// quantum band relation P_{ell-1}(X_{-1}) * (X_0 - g_ell(X_{-1})), then one
/// classical band relation Q_{p-1}(X_i) * (X_{i+1} - h_p(X_i)) for each
/// 0 <= i < n with the determinant parameter d raised to p^i (each layer
/// carries its own determinant), then the determinant relation dq^ell - d.
/// Empty for n = -1.
std::vector<PresentationPoly> kernel_generators(long long n, const Params& params);

/// The determinant relation dq^ell - d at arity n + 2.
PresentationPoly det_relation(long long n, const Params& params);

/// The naive variant dq^ell - d^ell at arity n + 2.  Its image under the
/// evaluation map is nonzero, which the kernel report records as a negative
/// control.
PresentationPoly det_relation_literal(long long n, const Params& params);

/// Image of a presentation polynomial in the representation ring: X_{-1}
/// evaluates to the class of the quantum standard module, X_i to the class
/// with the standard module on classical level i, dq and d to the two
/// determinant classes.  Requires arity <= n_max + 2 levels worth of
/// variables; products are expanded through the normalization engine.
ClassVector phi_image(const PresentationPoly& f, const Params& params);

/// Checks of the Chebyshev/Dickson identities underlying the presentation.
struct IdentityReport {
    bool g_derivative = false;   // g_ell' = ell * P_{ell-1}
    bool h_derivative = false;   // h_p'  = p * Q_{p-1}
    bool p_doubling = false;     // P_{2ell-1} = g_ell * P_{ell-1}
    bool q_doubling = false;     // Q_{2p-1} = h_p * Q_{p-1}

    bool pass() const { return g_derivative && h_derivative && p_doubling && q_doubling; }
};
IdentityReport verify_identities(const Params& params);

/// Evaluation of every kernel generator (and the two determinant-relation
/// variants) in the representation ring.
struct KernelReport {
    long long n = 0;
    /// One entry per generator from kernel_generators, true when its image is
    /// the zero class vector.
    std::vector<bool> generator_vanishes;
    bool det_checked = false;            // false only for n = -1
    bool det_relation_vanishes = false;
    bool literal_det_relation_vanishes = false;   // expected to stay false

    bool pass() const;
};
KernelReport verify_kernel(long long n, const Params& params);

/// Spanning check for the evaluation map: every determinant-free special
/// canonical label of height <= n and length <= length_bound must lie in the
/// rational span of the images of the monomials in the X variables of
/// weighted degree <= length_bound (determinant powers are absorbed into the
/// coefficient ring).
struct SurjectivityReport {
    long long n = 0;
    long long length_bound = 0;
    std::size_t targets = 0;
    std::size_t monomials = 0;
    std::size_t reached = 0;
    std::size_t reached_integrally = 0;
    std::vector<TwistLabel> unreached;
    std::vector<TwistLabel> rational_only;

    bool pass() const { return unreached.empty(); }
};
SurjectivityReport surjectivity_probe(long long n, const Params& params,
                                      long long length_bound);

/// Reducedness check for the presentation ideal.  For n = 0 the verdict is
/// exact: the single band relation generates a radical ideal iff P_{ell-1} is
/// squarefree (the two factors are coprime since only one involves X_0).  For
/// n = 1 the verdict is sampled evidence: seeded rational points on the graph
/// component of the two band relations, with the Jacobian required to have
/// full rank at each accepted sample.
struct RadicalEvidence {
    long long n = 0;
    bool exact = false;
    bool radical = false;
    std::size_t samples = 0;
    std::size_t full_rank = 0;
    unsigned long long seed = 0;
};
RadicalEvidence radical_evidence(long long n, const Params& params,
                                 unsigned long long seed = 1, std::size_t samples = 20);

/// Zero-divisor test for X_{-1} - shift at level 0.  Primary criterion: the
/// integer substitution P_{ell-1}(shift) is nonzero in Z[dq].  For small ell
/// (and whenever the primary criterion fails) an exact linear-algebra check
/// over Q(dq) confirms the verdict on a graded truncation of the level-0
/// ring.
struct ZeroDivisorProbe {
    long long shift = 0;
    long long ell = 0;
    bool poly_nonzero = false;
    bool truncation_checked = false;
    bool truncation_injective = false;
    bool nonzerodivisor = false;
};
ZeroDivisorProbe nonzerodivisor_probe(long long shift, long long ell);

}  // namespace qtilt
