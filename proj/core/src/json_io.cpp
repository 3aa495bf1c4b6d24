#include "qtilt/json_io.hpp"

#include <cctype>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qtilt {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

long long expect_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        bad(std::string("expected an integer for ") + what);
    }
    return j.get<long long>();
}

const Json& expect_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

long long parse_ll(const std::string& text) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        bad("malformed integer '" + text + "'");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) {
        ++used;
    }
    if (used != text.size()) {
        bad("malformed integer '" + text + "'");
    }
    return value;
}

}  // namespace

Json coeff_to_json(const Int& c) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (c >= lo && c <= hi) {
        return Json(c.convert_to<long long>());
    }
    std::ostringstream os;
    os << c;
    return Json(os.str());
}

Int coeff_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Int(j.get<long long>());
    }
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad("malformed big-integer string");
        }
    }
    bad("coefficient must be an integer or a decimal string");
}

Json weight_to_json(Weight w) {
    return Json::array({w.a, w.b});
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        bad("a weight is a two-element array");
    }
    return Weight{expect_int(j[0], "weight entry"), expect_int(j[1], "weight entry")};
}

Json label_to_json(const TwistLabel& lbl) {
    Json levels = Json::array();
    for (const auto& u : lbl.levels) {
        levels.push_back(weight_to_json(u));
    }
    return Json{{"qlevel", weight_to_json(lbl.qlevel)}, {"levels", std::move(levels)}};
}

TwistLabel label_from_json(const Json& j) {
    TwistLabel lbl;
    lbl.qlevel = weight_from_json(expect_field(j, "qlevel"));
    const Json& levels = expect_field(j, "levels");
    if (!levels.is_array()) {
        bad("'levels' must be an array");
    }
    for (const auto& u : levels) {
        lbl.levels.push_back(weight_from_json(u));
    }
    return lbl;
}

Json character_to_json(const Character& ch) {
    Json out = Json::array();
    for (const auto& [exp, c] : ch.terms) {
        out.push_back(Json::array({exp.first, exp.second, coeff_to_json(c)}));
    }
    return out;
}

Character character_from_json(const Json& j) {
    if (!j.is_array()) {
        bad("a character is an array of [i, j, coeff] triples");
    }
    Character ch;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) {
            bad("a character term is an [i, j, coeff] triple");
        }
        ch.add_term(expect_int(term[0], "exponent"), expect_int(term[1], "exponent"),
                    coeff_from_json(term[2]));
    }
    return ch;
}

Json class_vector_to_json(const ClassVector& v, const Params& params) {
    Json summands = Json::array();
    for (const auto& [lbl, mult] : v.summands) {
        summands.push_back(Json{{"label", label_to_json(lbl)},
                                {"mult", coeff_to_json(mult)},
                                {"tilting", is_tilting_label(lbl, params)},
                                {"simple", is_simple_label(lbl, params)}});
    }
    return Json{{"summands", std::move(summands)},
                {"params", Json{{"l", params.ell}, {"p", params.p}}}};
}

std::pair<ClassVector, Params> class_vector_from_json(const Json& j) {
    const Json& jp = expect_field(j, "params");
    Params params{expect_int(expect_field(jp, "l"), "l"),
                  expect_int(expect_field(jp, "p"), "p")};
    validate(params);

    ClassVector v;
    const Json& summands = expect_field(j, "summands");
    if (!summands.is_array()) {
        bad("'summands' must be an array");
    }
    for (const auto& s : summands) {
        const TwistLabel lbl = label_from_json(expect_field(s, "label"));
        const Int mult = coeff_from_json(expect_field(s, "mult"));
        if (mult.is_zero()) {
            bad("zero multiplicity in class vector");
        }
        auto [it, inserted] = v.summands.emplace(lbl, mult);
        if (!inserted) {
            bad("duplicate label in class vector");
        }
    }
    return {std::move(v), params};
}

Json cheb_to_json(const ChebPoly& f) {
    Json out = Json::array();
    for (const auto& [key, c] : f.terms) {
        const auto [w, q, dd] = key;
        out.push_back(Json::array({w, q, dd, coeff_to_json(c)}));
    }
    return out;
}

ChebPoly cheb_from_json(const Json& j) {
    if (!j.is_array()) {
        bad("a polynomial is an array of [omega, dq, d, coeff] quadruples");
    }
    ChebPoly f;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 4) {
            bad("a polynomial term is an [omega, dq, d, coeff] quadruple");
        }
        f.add_term(expect_int(term[0], "degree"), expect_int(term[1], "degree"),
                   expect_int(term[2], "degree"), coeff_from_json(term[3]));
    }
    return f;
}

Weight parse_weight(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        bad("a weight is written 'a,b'");
    }
    return Weight{parse_ll(text.substr(0, comma)), parse_ll(text.substr(comma + 1))};
}

TwistLabel parse_label(const std::string& text) {
    TwistLabel lbl;
    std::size_t start = 0;
    bool first = true;
    while (start <= text.size()) {
        const auto semi = text.find(';', start);
        const std::string part =
            text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (first) {
            lbl.qlevel = parse_weight(part);
            first = false;
        } else {
            lbl.levels.push_back(parse_weight(part));
        }
        if (semi == std::string::npos) {
            break;
        }
        start = semi + 1;
    }
    return lbl;
}

}  // namespace qtilt
