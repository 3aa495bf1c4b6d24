#include "qtilt/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtilt {

namespace {

// Ordinary polynomial division a = q*b + r with deg r < deg b.  Both inputs
// must have non-negative exponents and b must be nonzero.
void poly_divrem(LaurentPoly a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    q = {};
    const long long db = b.max_degree();
    const Rat lead_b = b.coeff(db);
    while (!a.is_zero() && a.max_degree() >= db) {
        const long long da = a.max_degree();
        const Rat factor = a.coeff(da) / lead_b;
        q.add_term(da - db, factor);
        a -= factor * shifted(b, da - db);
    }
    r = std::move(a);
}

void cleanup(LaurentModule::Vector& v) {
    for (auto it = v.begin(); it != v.end();) {
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
}

void cleanup(std::map<std::size_t, LaurentPoly>& v) {
    for (auto it = v.begin(); it != v.end();) {
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    }
}

template <typename Map>
void axpy(Map& dst, const LaurentPoly& c, const Map& src) {
    if (c.is_zero()) {
        return;
    }
    for (const auto& [key, value] : src) {
        dst[key] += c * value;
    }
}

} // namespace

Rat LaurentPoly::coeff(long long e) const {
    const auto it = terms.find(e);
    return it == terms.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(long long e, const Rat& c) {
    if (c == 0) {
        return;
    }
    const auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

long long LaurentPoly::min_degree() const {
    if (terms.empty()) {
        throw std::domain_error("LaurentPoly: zero polynomial has no degree");
    }
    return terms.begin()->first;
}

long long LaurentPoly::max_degree() const {
    if (terms.empty()) {
        throw std::domain_error("LaurentPoly: zero polynomial has no degree");
    }
    return terms.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    LaurentPoly product;
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : rhs.terms) {
            product.add_term(e1 + e2, c1 * c2);
        }
    }
    terms = std::move(product.terms);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, c] : terms) {
        c *= scalar;
    }
    return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out = lhs;
    out *= rhs;
    return out;
}

LaurentPoly operator*(const Rat& scalar, LaurentPoly rhs) {
    rhs *= scalar;
    return rhs;
}

LaurentPoly operator-(LaurentPoly arg) {
    for (auto& [e, c] : arg.terms) {
        c = -c;
    }
    return arg;
}

LaurentPoly laurent_monomial(long long e, Rat c) {
    LaurentPoly out;
    out.add_term(e, c);
    return out;
}

LaurentPoly shifted(const LaurentPoly& f, long long k) {
    if (k == 0) {
        return f;
    }
    LaurentPoly out;
    for (const auto& [e, c] : f.terms) {
        out.terms.emplace(e + k, c);
    }
    return out;
}

bool is_integral(const LaurentPoly& f) {
    for (const auto& [e, c] : f.terms) {
        if (boost::multiprecision::denominator(c) != 1) {
            return false;
        }
    }
    return true;
}

bool divides(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) {
        return true;
    }
    if (a.is_zero()) {
        return false;
    }
    LaurentPoly q;
    LaurentPoly r;
    poly_divrem(shifted(b, -b.min_degree()), shifted(a, -a.min_degree()), q, r);
    return r.is_zero();
}

LaurentPoly div_exact(const LaurentPoly& b, const LaurentPoly& a) {
    if (a.is_zero()) {
        throw std::domain_error("div_exact: division by zero");
    }
    if (b.is_zero()) {
        return {};
    }
    LaurentPoly q;
    LaurentPoly r;
    poly_divrem(shifted(b, -b.min_degree()), shifted(a, -a.min_degree()), q, r);
    if (!r.is_zero()) {
        throw std::domain_error("div_exact: not divisible");
    }
    return shifted(q, b.min_degree() - a.min_degree());
}

std::tuple<LaurentPoly, LaurentPoly, LaurentPoly> extended_gcd(const LaurentPoly& a,
                                                               const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        return {{}, {}, {}};
    }

    // Run the Euclidean algorithm on the shifted ordinary polynomials while
    // carrying Bezout coefficients expressed against the original inputs.
    LaurentPoly r0;
    LaurentPoly s0;
    LaurentPoly t0;
    LaurentPoly r1;
    LaurentPoly s1;
    LaurentPoly t1;
    if (a.is_zero()) {
        r0 = shifted(b, -b.min_degree());
        t0 = laurent_monomial(-b.min_degree());
    } else {
        r0 = shifted(a, -a.min_degree());
        s0 = laurent_monomial(-a.min_degree());
        if (!b.is_zero()) {
            r1 = shifted(b, -b.min_degree());
            t1 = laurent_monomial(-b.min_degree());
        }
    }

    while (!r1.is_zero()) {
        LaurentPoly q;
        LaurentPoly r2;
        poly_divrem(r0, r1, q, r2);
        LaurentPoly s2 = s0 - q * s1;
        LaurentPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        s0 = std::move(s1);
        t0 = std::move(t1);
        r1 = std::move(r2);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }

    // Normalize the generator to a monic polynomial with nonzero constant term.
    const LaurentPoly unit =
        laurent_monomial(-r0.min_degree(), Rat(1) / r0.coeff(r0.max_degree()));
    return {unit * r0, unit * s0, unit * t0};
}

std::string to_string(const LaurentPoly& f) {
    if (f.terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        const Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) {
                os << '-';
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) {
            os << mag;
            if (e != 0) {
                os << '*';
            }
        }
        if (e != 0) {
            os << 'x';
            if (e != 1) {
                os << '^' << e;
            }
        }
    }
    return os.str();
}

void LaurentModule::add_generator(const Vector& v_in) {
    const std::size_t index = generator_count_++;

    Vector v;
    for (const auto& [row, entry] : v_in) {
        if (!entry.is_zero()) {
            v.emplace(row, entry);
        }
    }
    std::map<std::size_t, LaurentPoly> combo{{index, laurent_monomial(0)}};

    while (!v.empty()) {
        const long long row = v.begin()->first;
        const auto it = std::lower_bound(
            pivots_.begin(), pivots_.end(), row,
            [](const PivotVector& piv, long long r) { return piv.pivot_row < r; });
        if (it == pivots_.end() || it->pivot_row != row) {
            PivotVector piv;
            piv.entries = std::move(v);
            piv.combo = std::move(combo);
            piv.pivot_row = row;
            pivots_.insert(it, std::move(piv));
            return;
        }

        PivotVector& piv = *it;
        const LaurentPoly h = v.begin()->second;
        const LaurentPoly g = piv.entries.at(row);
        if (divides(g, h)) {
            const LaurentPoly q = div_exact(h, g);
            axpy(v, -q, piv.entries);
            axpy(combo, -q, piv.combo);
            cleanup(v);
            cleanup(combo);
        } else {
            // Two-vector gcd transform: replaces the pivot by one whose entry
            // at this row generates (g, h), and clears the row in v.  The
            // transform matrix has determinant one, so the span is unchanged.
            const auto [d, s, t] = extended_gcd(g, h);
            const LaurentPoly gd = div_exact(g, d);
            const LaurentPoly hd = div_exact(h, d);

            Vector new_pivot;
            axpy(new_pivot, s, piv.entries);
            axpy(new_pivot, t, v);
            std::map<std::size_t, LaurentPoly> new_pivot_combo;
            axpy(new_pivot_combo, s, piv.combo);
            axpy(new_pivot_combo, t, combo);

            Vector new_v;
            axpy(new_v, gd, v);
            axpy(new_v, -hd, piv.entries);
            std::map<std::size_t, LaurentPoly> new_combo;
            axpy(new_combo, gd, combo);
            axpy(new_combo, -hd, piv.combo);

            cleanup(new_pivot);
            cleanup(new_pivot_combo);
            cleanup(new_v);
            cleanup(new_combo);
            piv.entries = std::move(new_pivot);
            piv.combo = std::move(new_pivot_combo);
            v = std::move(new_v);
            combo = std::move(new_combo);
        }
    }
}

bool LaurentModule::contains(Vector target, std::map<std::size_t, LaurentPoly>* combo) const {
    std::map<std::size_t, LaurentPoly> acc;
    cleanup(target);
    while (!target.empty()) {
        const long long row = target.begin()->first;
        const auto it = std::lower_bound(
            pivots_.begin(), pivots_.end(), row,
            [](const PivotVector& piv, long long r) { return piv.pivot_row < r; });
        if (it == pivots_.end() || it->pivot_row != row) {
            return false;
        }
        const LaurentPoly& g = it->entries.at(row);
        const LaurentPoly h = target.begin()->second;
        if (!divides(g, h)) {
            return false;
        }
        const LaurentPoly q = div_exact(h, g);
        axpy(target, -q, it->entries);
        axpy(acc, q, it->combo);
        cleanup(target);
    }
    if (combo != nullptr) {
        cleanup(acc);
        *combo = std::move(acc);
    }
    return true;
}

long long rank_over_fraction_field(std::vector<std::vector<LaurentPoly>> mat) {
    if (mat.empty()) {
        return 0;
    }
    const std::size_t rows = mat.size();
    const std::size_t cols = mat.front().size();
    for (const auto& row : mat) {
        if (row.size() != cols) {
            throw std::invalid_argument("rank_over_fraction_field: ragged matrix");
        }
    }

    // Fraction-free elimination: every division below is exact.
    LaurentPoly prev = laurent_monomial(0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pr = rank;
        while (pr < rows && mat[pr][col].is_zero()) {
            ++pr;
        }
        if (pr == rows) {
            continue;
        }
        std::swap(mat[rank], mat[pr]);
        const LaurentPoly pivot = mat[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mat[i][j] = div_exact(pivot * mat[i][j] - mat[i][col] * mat[rank][j], prev);
            }
            mat[i][col] = {};
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace qtilt
