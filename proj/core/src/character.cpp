#include "qtilt/character.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qtilt {

Int Character::coeff(long long i, long long j) const {
    const auto it = terms.find({i, j});
    return it == terms.end() ? Int(0) : it->second;
}

void Character::add_term(long long i, long long j, const Int& c) {
    if (c == 0) {
        return;
    }
    const auto [it, inserted] = terms.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

Character& Character::operator+=(const Character& rhs) {
    for (const auto& [e, c] : rhs.terms) {
        add_term(e.first, e.second, c);
    }
    return *this;
}

Character& Character::operator-=(const Character& rhs) {
    for (const auto& [e, c] : rhs.terms) {
        add_term(e.first, e.second, -c);
    }
    return *this;
}

Character& Character::operator*=(const Character& rhs) {
    Character product;
    for (const auto& [e1, c1] : terms) {
        for (const auto& [e2, c2] : rhs.terms) {
            product.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
        }
    }
    terms = std::move(product.terms);
    return *this;
}

Character& Character::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, c] : terms) {
        c *= scalar;
    }
    return *this;
}

Character operator+(Character lhs, const Character& rhs) {
    lhs += rhs;
    return lhs;
}

Character operator-(Character lhs, const Character& rhs) {
    lhs -= rhs;
    return lhs;
}

Character operator*(const Character& lhs, const Character& rhs) {
    Character out = lhs;
    out *= rhs;
    return out;
}

Character operator*(const Int& scalar, Character rhs) {
    rhs *= scalar;
    return rhs;
}

Character operator-(Character arg) {
    for (auto& [e, c] : arg.terms) {
        c = -c;
    }
    return arg;
}

Character monomial_character(long long i, long long j, Int c) {
    Character out;
    out.add_term(i, j, c);
    return out;
}

Character weyl_character(Weight w) {
    if (!is_dominant(w)) {
        throw std::invalid_argument("weyl_character: weight must be dominant");
    }
    Character out;
    for (long long i = 0; i <= diff(w); ++i) {
        out.add_term(w.a - i, w.b + i, Int(1));
    }
    return out;
}

Character det_shift(const Character& ch, long long k) {
    if (k == 0) {
        return ch;
    }
    Character out;
    for (const auto& [e, c] : ch.terms) {
        out.terms.emplace(Character::Exponent{e.first + k, e.second + k}, c);
    }
    return out;
}

bool is_w_symmetric(const Character& ch) {
    for (const auto& [e, c] : ch.terms) {
        if (ch.coeff(e.second, e.first) != c) {
            return false;
        }
    }
    return true;
}

Int dimension(const Character& ch) {
    Int total = 0;
    for (const auto& [e, c] : ch.terms) {
        total += c;
    }
    return total;
}

std::string to_string(const Character& ch) {
    if (ch.terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ch.terms) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                os << '-';
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool constant = e.first == 0 && e.second == 0;
        if (mag != 1 || constant) {
            os << mag;
            if (!constant) {
                os << '*';
            }
        }
        if (e.first != 0) {
            os << "t1";
            if (e.first != 1) {
                os << '^' << e.first;
            }
            if (e.second != 0) {
                os << '*';
            }
        }
        if (e.second != 0) {
            os << "t2";
            if (e.second != 1) {
                os << '^' << e.second;
            }
        }
    }
    return os.str();
}

} // namespace qtilt
