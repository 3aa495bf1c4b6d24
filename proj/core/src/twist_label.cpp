#include "qtilt/twist_label.hpp"

#include "qtilt/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace qtilt {

namespace {

// Trailing (0,0) layers carry no information; canonical labels never store them.
void trim_trailing_zero_layers(std::vector<Weight>& levels) {
    while (!levels.empty() && levels.back() == Weight{0, 0}) {
        levels.pop_back();
    }
}

} // namespace

bool all_dominant(const TwistLabel& lbl) {
    if (!is_dominant(lbl.qlevel)) {
        return false;
    }
    for (const auto& u : lbl.levels) {
        if (!is_dominant(u)) {
            return false;
        }
    }
    return true;
}

long long length_label(const TwistLabel& lbl, const Params& params) {
    validate(params);
    if (!all_dominant(lbl)) {
        throw std::invalid_argument("label: all layers must be dominant");
    }
    long long total = diff(lbl.qlevel);
    long long scale = params.ell;
    for (const auto& u : lbl.levels) {
        total += scale * diff(u);
        scale *= params.p;
    }
    return total;
}

bool is_special(const TwistLabel& lbl, const Params& params) {
    validate(params);
    if (!in_pi(lbl.qlevel, params.ell)) {
        return false;
    }
    for (const auto& u : lbl.levels) {
        if (!in_pi(u, params.p)) {
            return false;
        }
    }
    return true;
}

TwistLabel canonicalize_label(const TwistLabel& lbl, const Params& params) {
    validate(params);
    if (!all_dominant(lbl)) {
        throw std::invalid_argument("label: all layers must be dominant");
    }

    std::vector<long long> diffs;
    diffs.reserve(lbl.levels.size());
    for (const auto& u : lbl.levels) {
        diffs.push_back(diff(u));
    }

    // Total determinant power carried by the label, b[-1] + ell * sum_i p^i * b[i].
    long long total = lbl.qlevel.b;
    {
        long long scale = params.ell;
        for (const auto& u : lbl.levels) {
            total += scale * u.b;
            scale *= params.p;
        }
    }

    // The quantum determinant digit is always reduced into [0, ell-1]; the
    // ell-fold surplus becomes an ordinary determinant and moves one layer up.
    const long long beta_q = floor_mod(total, params.ell);
    long long rem = (total - beta_q) / params.ell;

    // Distribute the remainder over the classical layers.  Digits strictly
    // below a layer with nonzero difference must be reduced into [0, p-1];
    // once above every such layer, a residue in [0, p-1] or a negative residue
    // settles where it is, while a residue >= p keeps carrying upward.
    std::vector<long long> dets;
    std::size_t i = 0;
    while (i < diffs.size() || rem != 0) {
        bool diff_above = false;
        for (std::size_t j = i + 1; j < diffs.size(); ++j) {
            if (diffs[j] > 0) {
                diff_above = true;
                break;
            }
        }
        if (diff_above || rem >= params.p) {
            const long long d = floor_mod(rem, params.p);
            dets.push_back(d);
            rem = (rem - d) / params.p;
        } else {
            dets.push_back(rem);
            rem = 0;
        }
        ++i;
    }

    TwistLabel out;
    out.qlevel = Weight{diff(lbl.qlevel) + beta_q, beta_q};
    const std::size_t layers = std::max(diffs.size(), dets.size());
    out.levels.reserve(layers);
    for (std::size_t k = 0; k < layers; ++k) {
        const long long dk = k < diffs.size() ? diffs[k] : 0;
        const long long bk = k < dets.size() ? dets[k] : 0;
        out.levels.push_back(Weight{dk + bk, bk});
    }
    trim_trailing_zero_layers(out.levels);
    return out;
}

TwistLabel steinberg_factorize(Weight w, const Params& params) {
    validate(params);
    if (!is_dominant(w)) {
        throw std::invalid_argument("weight: must be dominant");
    }

    // Mixed-radix digits of the difference: one base-ell digit, then base-p.
    long long d = diff(w);
    const long long dq = floor_mod(d, params.ell);
    d = (d - dq) / params.ell;

    TwistLabel raw;
    // Park the full determinant power on the quantum layer; canonicalization
    // carries it into place without disturbing the difference digits.
    raw.qlevel = Weight{dq + w.b, w.b};
    while (d != 0) {
        const long long di = floor_mod(d, params.p);
        raw.levels.push_back(Weight{di, 0});
        d = (d - di) / params.p;
    }
    return canonicalize_label(raw, params);
}

Weight recompose(const TwistLabel& lbl, const Params& params) {
    validate(params);
    Weight w = lbl.qlevel;
    long long scale = params.ell;
    for (const auto& u : lbl.levels) {
        w = w + Weight{scale * u.a, scale * u.b};
        scale *= params.p;
    }
    return w;
}

std::pair<TwistLabel, long long> det_split(const TwistLabel& lbl, const Params& params) {
    validate(params);
    TwistLabel skeleton;
    skeleton.qlevel = Weight{diff(lbl.qlevel), 0};
    long long power = lbl.qlevel.b;
    long long scale = params.ell;
    for (const auto& u : lbl.levels) {
        skeleton.levels.push_back(Weight{diff(u), 0});
        power += scale * u.b;
        scale *= params.p;
    }
    trim_trailing_zero_layers(skeleton.levels);
    return {std::move(skeleton), power};
}

std::string to_string(const TwistLabel& lbl) {
    std::ostringstream os;
    os << '[' << to_string(lbl.qlevel);
    if (!lbl.levels.empty()) {
        os << ';';
        for (std::size_t i = 0; i < lbl.levels.size(); ++i) {
            os << ' ' << to_string(lbl.levels[i]);
            if (i + 1 < lbl.levels.size()) {
                os << ',';
            }
        }
    }
    os << ']';
    return os.str();
}

} // namespace qtilt
