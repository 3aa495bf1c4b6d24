#include "qtilt/presentation.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtilt {

namespace {

void check_same_arity(const PresentationPoly& a, const PresentationPoly& b) {
    if (a.arity != b.arity) {
        throw std::invalid_argument("presentation: mixed arities");
    }
}

Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) {
        return Rat(1);
    }
    if (base.is_zero()) {
        if (e < 0) {
            throw std::domain_error("presentation: negative power of zero");
        }
        return Rat(0);
    }
    Rat acc(1);
    const Rat b = e > 0 ? base : Rat(1) / base;
    for (long long i = 0, stop = e > 0 ? e : -e; i < stop; ++i) {
        acc *= b;
    }
    return acc;
}

// Rank of a dense rational matrix by Gaussian elimination.
long long rank_rational(std::vector<std::vector<Rat>> m) {
    long long rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        const Rat inv = Rat(1) / m[static_cast<std::size_t>(rank)][col];
        for (std::size_t c = col; c < cols; ++c) {
            m[static_cast<std::size_t>(rank)][c] *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][col].is_zero()) {
                continue;
            }
            const Rat factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[static_cast<std::size_t>(rank)][c];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

void PresentationPoly::add_term(std::vector<long long> xs, long long dq_pow,
                                long long d_pow, Int c) {
    if (xs.size() != arity) {
        throw std::invalid_argument("presentation: exponent vector has wrong length");
    }
    for (const long long e : xs) {
        if (e < 0) {
            throw std::invalid_argument("presentation: negative X exponent");
        }
    }
    if (c.is_zero()) {
        return;
    }
    Key key{std::move(xs), dq_pow, d_pow};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms.erase(it);
    }
}

PresentationPoly& PresentationPoly::operator+=(const PresentationPoly& other) {
    check_same_arity(*this, other);
    for (const auto& [key, c] : other.terms) {
        add_term(key.xs, key.dq, key.d, c);
    }
    return *this;
}

PresentationPoly& PresentationPoly::operator-=(const PresentationPoly& other) {
    check_same_arity(*this, other);
    for (const auto& [key, c] : other.terms) {
        add_term(key.xs, key.dq, key.d, -c);
    }
    return *this;
}

PresentationPoly& PresentationPoly::operator*=(const PresentationPoly& other) {
    check_same_arity(*this, other);
    PresentationPoly out(arity);
    for (const auto& [ka, ca] : terms) {
        for (const auto& [kb, cb] : other.terms) {
            std::vector<long long> xs(arity);
            for (std::size_t i = 0; i < arity; ++i) {
                xs[i] = ka.xs[i] + kb.xs[i];
            }
            out.add_term(std::move(xs), ka.dq + kb.dq, ka.d + kb.d, ca * cb);
        }
    }
    terms = std::move(out.terms);
    return *this;
}

std::string PresentationPoly::to_string() const {
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c;
        for (std::size_t i = 0; i < arity; ++i) {
            if (key.xs[i] != 0) {
                os << "*X" << (static_cast<long long>(i) - 1) << "^" << key.xs[i];
            }
        }
        if (key.dq != 0) {
            os << "*dq^" << key.dq;
        }
        if (key.d != 0) {
            os << "*d^" << key.d;
        }
    }
    return os.str();
}

PresentationPoly presentation_variable(std::size_t arity, std::size_t index) {
    if (index >= arity) {
        throw std::invalid_argument("presentation: variable index out of range");
    }
    PresentationPoly f(arity);
    std::vector<long long> xs(arity, 0);
    xs[index] = 1;
    f.add_term(std::move(xs), 0, 0, Int(1));
    return f;
}

PresentationPoly presentation_constant(std::size_t arity, long long dq_pow,
                                       long long d_pow, Int c) {
    PresentationPoly f(arity);
    f.add_term(std::vector<long long>(arity, 0), dq_pow, d_pow, std::move(c));
    return f;
}

PresentationPoly inject_cheb(const ChebPoly& f, std::size_t arity, std::size_t var) {
    if (var >= arity) {
        throw std::invalid_argument("presentation: variable index out of range");
    }
    PresentationPoly out(arity);
    for (const auto& [key, c] : f.terms) {
        const auto [w, q, dd] = key;
        std::vector<long long> xs(arity, 0);
        xs[var] = w;
        out.add_term(std::move(xs), q, dd, c);
    }
    return out;
}

PresentationPoly derivative_x(const PresentationPoly& f, std::size_t index) {
    if (index >= f.arity) {
        throw std::invalid_argument("presentation: variable index out of range");
    }
    PresentationPoly out(f.arity);
    for (const auto& [key, c] : f.terms) {
        if (key.xs[index] == 0) {
            continue;
        }
        std::vector<long long> xs = key.xs;
        const long long e = xs[index];
        xs[index] = e - 1;
        out.add_term(std::move(xs), key.dq, key.d, c * Int(e));
    }
    return out;
}

Rat evaluate_poly(const PresentationPoly& f, const std::vector<Rat>& xs,
                  const Rat& dq, const Rat& d) {
    if (xs.size() != f.arity) {
        throw std::invalid_argument("presentation: wrong number of arguments");
    }
    Rat total(0);
    for (const auto& [key, c] : f.terms) {
        Rat term{c};
        for (std::size_t i = 0; i < f.arity; ++i) {
            term *= rat_pow(xs[i], key.xs[i]);
        }
        term *= rat_pow(dq, key.dq);
        term *= rat_pow(d, key.d);
        total += term;
    }
    return total;
}

PresentationPoly det_relation(long long n, const Params& params) {
    validate(params);
    if (n < -1) {
        throw std::invalid_argument("presentation: level must be >= -1");
    }
    const auto arity = static_cast<std::size_t>(n + 2);
    return presentation_constant(arity, params.ell, 0, Int(1)) -
           presentation_constant(arity, 0, 1, Int(1));
}

PresentationPoly det_relation_literal(long long n, const Params& params) {
    validate(params);
    if (n < -1) {
        throw std::invalid_argument("presentation: level must be >= -1");
    }
    const auto arity = static_cast<std::size_t>(n + 2);
    return presentation_constant(arity, params.ell, 0, Int(1)) -
           presentation_constant(arity, 0, params.ell, Int(1));
}

std::vector<PresentationPoly> kernel_generators(long long n, const Params& params) {
    validate(params);
    if (n < -1) {
        throw std::invalid_argument("presentation: level must be >= -1");
    }
    std::vector<PresentationPoly> gens;
    if (n == -1) {
        return gens;
    }
    const auto arity = static_cast<std::size_t>(n + 2);

    gens.push_back(inject_cheb(cheb_p(params.ell - 1), arity, 0) *
                   (presentation_variable(arity, 1) -
                    inject_cheb(dickson_g(params.ell), arity, 0)));
    // The relation joining layers i and i+1 is written with the determinant
    // of layer i's standard module, the p^i-th power of d.
    long long det_scale = 1;
    for (long long i = 0; i < n; ++i) {
        const auto lo = static_cast<std::size_t>(i + 1);
        gens.push_back(
            inject_cheb(scale_d_degrees(cheb_q(params.p - 1), det_scale), arity, lo) *
            (presentation_variable(arity, lo + 1) -
             inject_cheb(scale_d_degrees(dickson_h(params.p), det_scale), arity, lo)));
        det_scale *= params.p;
    }
    gens.push_back(det_relation(n, params));
    return gens;
}

ClassVector phi_image(const PresentationPoly& f, const Params& params) {
    validate(params);
    ClassVector out;
    for (const auto& [key, c] : f.terms) {
        std::vector<TwistLabel> factors;
        for (std::size_t var = 0; var < f.arity; ++var) {
            TwistLabel gen;
            if (var == 0) {
                gen.qlevel = Weight{1, 0};
            } else {
                gen.levels.assign(var, Weight{0, 0});
                gen.levels[var - 1] = Weight{1, 0};
            }
            for (long long rep = 0; rep < key.xs[var]; ++rep) {
                factors.push_back(gen);
            }
        }
        if (key.dq != 0) {
            factors.push_back(TwistLabel{Weight{key.dq, key.dq}, {}});
        }
        if (key.d != 0) {
            factors.push_back(TwistLabel{Weight{0, 0}, {Weight{key.d, key.d}}});
        }
        add_scaled(out, normalize_product(factors, params), c);
    }
    return out;
}

IdentityReport verify_identities(const Params& params) {
    validate(params);
    IdentityReport rep;
    const ChebPoly p_top = cheb_p(params.ell - 1);
    const ChebPoly q_top = cheb_q(params.p - 1);
    const ChebPoly g = dickson_g(params.ell);
    const ChebPoly h = dickson_h(params.p);

    rep.g_derivative = omega_derivative(g) == Int(params.ell) * p_top;
    rep.h_derivative = omega_derivative(h) == Int(params.p) * q_top;
    rep.p_doubling = cheb_p(2 * params.ell - 1) == g * p_top;
    rep.q_doubling = cheb_q(2 * params.p - 1) == h * q_top;
    return rep;
}

bool KernelReport::pass() const {
    for (const bool ok : generator_vanishes) {
        if (!ok) {
            return false;
        }
    }
    return !det_checked || !literal_det_relation_vanishes;
}

KernelReport verify_kernel(long long n, const Params& params) {
    validate(params);
    KernelReport rep;
    rep.n = n;
    for (const auto& gen : kernel_generators(n, params)) {
        rep.generator_vanishes.push_back(phi_image(gen, params).summands.empty());
    }
    if (n >= 0) {
        rep.det_checked = true;
        rep.det_relation_vanishes =
            phi_image(det_relation(n, params), params).summands.empty();
        rep.literal_det_relation_vanishes =
            phi_image(det_relation_literal(n, params), params).summands.empty();
    }
    return rep;
}

SurjectivityReport surjectivity_probe(long long n, const Params& params,
                                      long long length_bound) {
    validate(params);
    if (n < -1) {
        throw std::invalid_argument("presentation: level must be >= -1");
    }
    if (length_bound < 0) {
        throw std::invalid_argument("presentation: negative length bound");
    }
    SurjectivityReport rep;
    rep.n = n;
    rep.length_bound = length_bound;
    const auto arity = static_cast<std::size_t>(n + 2);

    // Determinant-free special canonical labels of height <= n and length
    // <= length_bound: diff tuples within the band bounds, trailing entry
    // nonzero, plus the unit label.
    std::vector<TwistLabel> targets;
    {
        std::vector<long long> diffs;   // diffs[0] is the quantum entry
        const auto emit_label = [&]() {
            TwistLabel lbl;
            if (!diffs.empty()) {
                lbl.qlevel = Weight{diffs[0], 0};
                for (std::size_t i = 1; i < diffs.size(); ++i) {
                    lbl.levels.push_back(Weight{diffs[i], 0});
                }
                if (!lbl.levels.empty() && lbl.levels.back() == Weight{0, 0}) {
                    return;   // trailing zero layer: not canonical
                }
                if (diffs.size() == 1 && diffs[0] == 0) {
                    return;   // unit handled separately
                }
            }
            targets.push_back(std::move(lbl));
        };
        const std::function<void(std::size_t, long long)> walk =
            [&](std::size_t depth, long long remaining) {
                if (depth > arity) {
                    return;
                }
                if (!diffs.empty()) {
                    emit_label();
                }
                if (depth == arity) {
                    return;
                }
                const long long scale = depth == 0 ? 1
                                                   : [&] {
                                                         long long s = params.ell;
                                                         for (std::size_t i = 1; i < depth; ++i) {
                                                             s *= params.p;
                                                         }
                                                         return s;
                                                     }();
                const long long top = depth == 0 ? 2 * params.ell - 2 : 2 * params.p - 2;
                for (long long delta = 0; delta <= top && delta * scale <= remaining; ++delta) {
                    diffs.push_back(delta);
                    walk(depth + 1, remaining - delta * scale);
                    diffs.pop_back();
                }
            };
        targets.push_back(TwistLabel{});   // unit
        walk(0, length_bound);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
    rep.targets = targets.size();

    // Row ids: one row per determinant-free skeleton, assigned on first use.
    std::map<TwistLabel, long long> row_of;
    const auto row_id = [&row_of](const TwistLabel& skel) {
        const auto [it, inserted] =
            row_of.emplace(skel, static_cast<long long>(row_of.size()));
        return it->second;
    };
    for (const auto& t : targets) {
        row_id(t);
    }

    const auto collapse = [&](const ClassVector& v) {
        LaurentModule::Vector vec;
        for (const auto& [lbl, mult] : v.summands) {
            const auto [skel, det_power] = det_split(lbl, params);
            vec[row_id(skel)].add_term(det_power, Rat(mult));
        }
        return vec;
    };

    // Monomials in the X variables of weighted degree <= length_bound; the
    // two determinant variables act through the Laurent coefficient ring.
    LaurentModule module;
    {
        std::vector<long long> xs(arity, 0);
        const std::function<void(std::size_t, long long)> build =
            [&](std::size_t var, long long remaining) {
                if (var == arity) {
                    PresentationPoly mono(arity);
                    mono.add_term(xs, 0, 0, Int(1));
                    module.add_generator(collapse(phi_image(mono, params)));
                    ++rep.monomials;
                    return;
                }
                long long scale = 1;
                if (var >= 1) {
                    scale = params.ell;
                    for (std::size_t i = 1; i < var; ++i) {
                        scale *= params.p;
                    }
                }
                for (long long e = 0; e * scale <= remaining; ++e) {
                    xs[var] = e;
                    build(var + 1, remaining - e * scale);
                }
                xs[var] = 0;
            };
        build(0, length_bound);
    }

    for (const auto& t : targets) {
        LaurentModule::Vector want;
        want[row_of.at(t)] = laurent_monomial(0);
        std::map<std::size_t, LaurentPoly> combo;
        if (!module.contains(want, &combo)) {
            rep.unreached.push_back(t);
            continue;
        }
        ++rep.reached;
        bool integral = true;
        for (const auto& [idx, coeff] : combo) {
            if (!is_integral(coeff)) {
                integral = false;
                break;
            }
        }
        if (integral) {
            ++rep.reached_integrally;
        } else {
            rep.rational_only.push_back(t);
        }
    }
    return rep;
}

RadicalEvidence radical_evidence(long long n, const Params& params,
                                 unsigned long long seed, std::size_t samples) {
    validate(params);
    RadicalEvidence rep;
    rep.n = n;
    rep.seed = seed;
    if (n == 0) {
        // Exact: the single band relation is squarefree iff its first factor
        // is (the second factor is the only one involving X_0, so the two are
        // coprime, and X_0 - g is linear in X_0 hence squarefree).
        rep.exact = true;
        rep.radical = squarefree_in_omega(cheb_p(params.ell - 1));
        return rep;
    }
    if (n != 1) {
        throw std::invalid_argument("presentation: radical evidence covers n in {0, 1}");
    }

    // Sampled evidence on the graph component of the two band relations:
    // random rational points with the determinant parameters specialized to
    // nonzero rationals, requiring the 2x3 Jacobian in the X variables to
    // have full rank.  Points on the other components (roots of the first
    // factors) are avoided, since those are genuine component intersections.
    const auto gens = kernel_generators(1, params);
    const PresentationPoly& f0 = gens[0];
    const PresentationPoly& f1 = gens[1];
    const PresentationPoly p_top = inject_cheb(cheb_p(params.ell - 1), 3, 0);
    const PresentationPoly q_top = inject_cheb(cheb_q(params.p - 1), 3, 1);
    const PresentationPoly g = inject_cheb(dickson_g(params.ell), 3, 0);
    const PresentationPoly h = inject_cheb(dickson_h(params.p), 3, 1);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    const auto draw = [&](bool nonzero) {
        for (;;) {
            const long long a = num(rng);
            if (nonzero && a == 0) {
                continue;
            }
            return Rat(a, den(rng));
        }
    };

    std::size_t attempts = 0;
    while (rep.samples < samples && attempts < 200 * samples + 200) {
        ++attempts;
        const Rat dq = draw(true);
        const Rat d = draw(true);
        std::vector<Rat> pt{draw(false), Rat(0), Rat(0)};
        if (evaluate_poly(p_top, pt, dq, d).is_zero()) {
            continue;
        }
        pt[1] = evaluate_poly(g, pt, dq, d);
        if (evaluate_poly(q_top, pt, dq, d).is_zero()) {
            continue;
        }
        pt[2] = evaluate_poly(h, pt, dq, d);

        std::vector<std::vector<Rat>> jac(2, std::vector<Rat>(3));
        for (std::size_t col = 0; col < 3; ++col) {
            jac[0][col] = evaluate_poly(derivative_x(f0, col), pt, dq, d);
            jac[1][col] = evaluate_poly(derivative_x(f1, col), pt, dq, d);
        }
        ++rep.samples;
        if (rank_rational(jac) == 2) {
            ++rep.full_rank;
        }
    }
    rep.exact = false;
    rep.radical = rep.samples > 0 && rep.full_rank == rep.samples;
    return rep;
}

ZeroDivisorProbe nonzerodivisor_probe(long long shift, long long ell) {
    if (ell < 2) {
        throw std::invalid_argument("presentation: quantum modulus must be >= 2");
    }
    ZeroDivisorProbe rep;
    rep.shift = shift;
    rep.ell = ell;
    rep.poly_nonzero = !substitute_omega_int(cheb_p(ell - 1), shift).is_zero();

    if (ell <= 5 || !rep.poly_nonzero) {
        // Exact confirmation on a graded truncation of the level-0 ring over
        // Q(dq): multiplication by X_{-1} - shift from the span of
        // P_i * X_0^k (i <= 2*ell-2, k <= 3) into the same span with k <= 4.
        // The only reduction needed is P_{2*ell-1} * X_0^k -> P_{ell-1} *
        // X_0^{k+1}, which subtracts an ideal element.  A kernel vector in
        // this span exists precisely when X_{-1} - shift divides P_{ell-1}
        // over Q(dq), so full column rank decides the verdict.
        rep.truncation_checked = true;
        const long long span = 2 * ell - 1;    // P indices 0 .. 2*ell-2
        const long long rows = 5 * span;       // X_0 powers 0..4
        const long long cols = 4 * span;       // X_0 powers 0..3
        std::vector<std::vector<LaurentPoly>> mat(
            static_cast<std::size_t>(rows),
            std::vector<LaurentPoly>(static_cast<std::size_t>(cols)));
        const auto row = [span](long long i, long long k) {
            return static_cast<std::size_t>(k * span + i);
        };
        for (long long i = 0; i < span; ++i) {
            for (long long k = 0; k < 4; ++k) {
                const auto col = static_cast<std::size_t>(k * span + i);
                if (i + 1 < span) {
                    mat[row(i + 1, k)][col] += laurent_monomial(0);
                } else {
                    mat[row(ell - 1, k + 1)][col] += laurent_monomial(0);
                }
                if (i >= 1) {
                    mat[row(i - 1, k)][col] += laurent_monomial(1);
                }
                mat[row(i, k)][col] += laurent_monomial(0, Rat(-shift));
            }
        }
        rep.truncation_injective = rank_over_fraction_field(std::move(mat)) == cols;
        rep.nonzerodivisor = rep.truncation_injective;
    } else {
        rep.nonzerodivisor = rep.poly_nonzero;
    }
    return rep;
}

}  // namespace qtilt
