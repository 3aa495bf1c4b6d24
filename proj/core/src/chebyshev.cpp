#include "qtilt/chebyshev.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtilt {

namespace {

// f_0, f_1, then f_{k+1} = omega * f_k - lower * f_{k-1}.
ChebPoly run_recursion(long long n, ChebPoly f0, ChebPoly f1, const ChebPoly& lower) {
    if (n < 0) {
        throw std::invalid_argument("recursion index must be non-negative");
    }
    if (n == 0) {
        return f0;
    }
    const ChebPoly omega = cheb_monomial(1, 0, 0);
    ChebPoly prev = std::move(f0);
    ChebPoly cur = std::move(f1);
    for (long long k = 1; k < n; ++k) {
        ChebPoly nxt = omega * cur - lower * prev;
        prev = std::move(cur);
        cur = std::move(nxt);
    }
    return cur;
}

Int integer_content(const ChebPoly& f) {
    Int g = 0;
    for (const auto& [key, c] : f.terms) {
        g = boost::multiprecision::gcd(g, c);
    }
    return g;
}

ChebPoly strip_integer_content(ChebPoly f) {
    const Int g = integer_content(f);
    if (g > 1) {
        for (auto& [key, c] : f.terms) {
            c /= g;
        }
    }
    return f;
}

// Fraction-free remainder of a by b in the variable omega: repeatedly cancels
// the leading omega-term of a after scaling by the leading coefficient of b.
// The result differs from the true remainder by a nonzero factor from
// Z[dq, d], which leaves gcd degrees unchanged.
ChebPoly pseudo_remainder(ChebPoly a, const ChebPoly& b) {
    const long long db = omega_degree(b);
    const ChebPoly lead_b = omega_coefficient(b, db);
    while (!a.is_zero() && omega_degree(a) >= db) {
        const long long da = omega_degree(a);
        const ChebPoly lead_a = omega_coefficient(a, da);
        a = lead_b * a - lead_a * cheb_monomial(da - db, 0, 0) * b;
    }
    return a;
}

} // namespace

Int ChebPoly::coeff(long long w, long long q, long long dd) const {
    const auto it = terms.find({w, q, dd});
    return it == terms.end() ? Int(0) : it->second;
}

void ChebPoly::add_term(long long w, long long q, long long dd, const Int& c) {
    if (w < 0 || q < 0 || dd < 0) {
        throw std::invalid_argument("ChebPoly: degrees must be non-negative");
    }
    if (c == 0) {
        return;
    }
    const auto [it, inserted] = terms.try_emplace({w, q, dd}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

ChebPoly& ChebPoly::operator+=(const ChebPoly& rhs) {
    for (const auto& [key, c] : rhs.terms) {
        add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    }
    return *this;
}

ChebPoly& ChebPoly::operator-=(const ChebPoly& rhs) {
    for (const auto& [key, c] : rhs.terms) {
        add_term(std::get<0>(key), std::get<1>(key), std::get<2>(key), -c);
    }
    return *this;
}

ChebPoly& ChebPoly::operator*=(const ChebPoly& rhs) {
    ChebPoly product;
    for (const auto& [k1, c1] : terms) {
        for (const auto& [k2, c2] : rhs.terms) {
            product.add_term(std::get<0>(k1) + std::get<0>(k2),
                             std::get<1>(k1) + std::get<1>(k2),
                             std::get<2>(k1) + std::get<2>(k2), c1 * c2);
        }
    }
    terms = std::move(product.terms);
    return *this;
}

ChebPoly& ChebPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [key, c] : terms) {
        c *= scalar;
    }
    return *this;
}

ChebPoly operator+(ChebPoly lhs, const ChebPoly& rhs) {
    lhs += rhs;
    return lhs;
}

ChebPoly operator-(ChebPoly lhs, const ChebPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

ChebPoly operator*(const ChebPoly& lhs, const ChebPoly& rhs) {
    ChebPoly out = lhs;
    out *= rhs;
    return out;
}

ChebPoly operator*(const Int& scalar, ChebPoly rhs) {
    rhs *= scalar;
    return rhs;
}

ChebPoly operator-(ChebPoly arg) {
    for (auto& [key, c] : arg.terms) {
        c = -c;
    }
    return arg;
}

ChebPoly cheb_monomial(long long w, long long q, long long dd, Int c) {
    ChebPoly out;
    out.add_term(w, q, dd, c);
    return out;
}

ChebPoly cheb_p(long long r) {
    return run_recursion(r, cheb_monomial(0, 0, 0), cheb_monomial(1, 0, 0),
                         cheb_monomial(0, 1, 0));
}

ChebPoly cheb_q(long long r) {
    return run_recursion(r, cheb_monomial(0, 0, 0), cheb_monomial(1, 0, 0),
                         cheb_monomial(0, 0, 1));
}

ChebPoly dickson_g(long long k) {
    return run_recursion(k, cheb_monomial(0, 0, 0, Int(2)), cheb_monomial(1, 0, 0),
                         cheb_monomial(0, 1, 0));
}

ChebPoly dickson_h(long long k) {
    return run_recursion(k, cheb_monomial(0, 0, 0, Int(2)), cheb_monomial(1, 0, 0),
                         cheb_monomial(0, 0, 1));
}

ChebPoly scale_d_degrees(const ChebPoly& f, long long k) {
    if (k < 1) {
        throw std::invalid_argument("chebyshev: d-power scale must be positive");
    }
    ChebPoly out;
    for (const auto& [key, c] : f.terms) {
        const auto [w, q, dd] = key;
        out.add_term(w, q, dd * k, c);
    }
    return out;
}

ChebPoly omega_derivative(const ChebPoly& f) {
    ChebPoly out;
    for (const auto& [key, c] : f.terms) {
        const long long w = std::get<0>(key);
        if (w > 0) {
            out.add_term(w - 1, std::get<1>(key), std::get<2>(key), Int(w) * c);
        }
    }
    return out;
}

long long omega_degree(const ChebPoly& f) {
    long long deg = -1;
    for (const auto& [key, c] : f.terms) {
        deg = std::max(deg, std::get<0>(key));
    }
    return deg;
}

ChebPoly omega_coefficient(const ChebPoly& f, long long k) {
    ChebPoly out;
    for (const auto& [key, c] : f.terms) {
        if (std::get<0>(key) == k) {
            out.add_term(0, std::get<1>(key), std::get<2>(key), c);
        }
    }
    return out;
}

ChebPoly substitute_omega_int(const ChebPoly& f, long long value) {
    ChebPoly out;
    for (const auto& [key, c] : f.terms) {
        const Int scaled = c * boost::multiprecision::pow(
                                   Int(value), static_cast<unsigned>(std::get<0>(key)));
        out.add_term(0, std::get<1>(key), std::get<2>(key), scaled);
    }
    return out;
}

Character substitute_torus(const ChebPoly& f, long long ell) {
    if (ell < 1) {
        throw std::invalid_argument("substitute_torus: ell must be positive");
    }
    // Powers of t1 + t2, extended on demand.
    std::vector<Character> omega_powers{monomial_character(0, 0)};
    const Character omega_image = monomial_character(1, 0) + monomial_character(0, 1);

    Character out;
    for (const auto& [key, c] : f.terms) {
        const long long w = std::get<0>(key);
        while (static_cast<long long>(omega_powers.size()) <= w) {
            omega_powers.push_back(omega_powers.back() * omega_image);
        }
        // dq and d are both powers of t1 * t2, so they only shift exponents.
        const long long det = std::get<1>(key) + ell * std::get<2>(key);
        Character term = det_shift(omega_powers[static_cast<std::size_t>(w)], det);
        term *= c;
        out += term;
    }
    return out;
}

bool squarefree_in_omega(const ChebPoly& f) {
    if (f.is_zero()) {
        return false;
    }
    if (omega_degree(f) == 0) {
        return true;
    }
    ChebPoly a = f;
    ChebPoly b = omega_derivative(f);
    while (!b.is_zero()) {
        ChebPoly r = strip_integer_content(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return omega_degree(a) == 0;
}

std::string to_string(const ChebPoly& f) {
    if (f.terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : f.terms) {
        const Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                os << '-';
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const auto [w, q, dd] = key;
        const bool constant = w == 0 && q == 0 && dd == 0;
        bool printed = false;
        if (mag != 1 || constant) {
            os << mag;
            printed = true;
        }
        const auto emit = [&](const char* name, long long deg) {
            if (deg == 0) {
                return;
            }
            if (printed) {
                os << '*';
            }
            os << name;
            if (deg != 1) {
                os << '^' << deg;
            }
            printed = true;
        };
        emit("omega", w);
        emit("dq", q);
        emit("d", dd);
    }
    return os.str();
}

} // namespace qtilt
