#include "qtilt/fusion.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace qtilt {

void add_scaled(ClassVector& dst, const ClassVector& src, const Int& scale) {
    if (scale == 0) {
        return;
    }
    for (const auto& [lbl, mult] : src.summands) {
        const auto it = dst.summands.try_emplace(lbl, Int(0)).first;
        it->second += scale * mult;
        if (it->second == 0) {
            dst.summands.erase(it);
        }
    }
}

Character class_vector_character(const ClassVector& v, const Params& params) {
    validate(params);
    Character total;
    for (const auto& [lbl, mult] : v.summands) {
        Character ch = label_character(lbl, params);
        ch *= mult;
        total += ch;
    }
    return total;
}

bool is_tilting_label(const TwistLabel& lbl, const Params& params) {
    validate(params);
    if (!all_dominant(lbl)) {
        return false;
    }
    if (lbl.levels.empty()) {
        return true;
    }
    if (!in_band(lbl.qlevel, params.ell)) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < lbl.levels.size(); ++i) {
        if (!in_band(lbl.levels[i], params.p)) {
            return false;
        }
    }
    return true;
}

bool is_simple_label(const TwistLabel& lbl, const Params& params) {
    validate(params);
    if (!all_dominant(lbl)) {
        return false;
    }
    if (diff(lbl.qlevel) > params.ell - 1) {
        return false;
    }
    for (const auto& u : lbl.levels) {
        if (diff(u) > params.p - 1) {
            return false;
        }
    }
    return true;
}

StrikeOutTrace strike_out(Weight w1, Weight w2, long long modulus) {
    if (region(w1, modulus) != Region::restricted || region(w2, modulus) != Region::restricted) {
        throw std::invalid_argument("strike_out: both factors must be restricted");
    }
    const long long a = diff(w1);
    const long long b = diff(w2);
    const long long r = w1.b + w2.b;
    const long long n = std::min(a, b);

    StrikeOutTrace tr;
    tr.det_power = r;
    tr.listed.reserve(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) {
        tr.listed.push_back({a + b - i + r, i + r});
    }

    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    for (long long j = 0; j <= n; ++j) {
        const long long d = a + b - 2 * j;
        if (d < modulus) {
            continue;
        }
        // The entry at diff d = modulus + u strikes its reflection partner at
        // diff modulus - u - 2, which sits at index j + u + 1.  Restrictedness
        // of both factors keeps that index on the list.
        const long long target = j + (d - modulus) + 1;
        if (target > n || removed[static_cast<std::size_t>(target)]) {
            throw std::logic_error("strike_out: reflection partner out of range");
        }
        removed[static_cast<std::size_t>(target)] = true;
        tr.struck.push_back(tr.listed[static_cast<std::size_t>(target)]);
    }
    for (long long i = 0; i <= n; ++i) {
        if (!removed[static_cast<std::size_t>(i)]) {
            tr.survivors.push_back(tr.listed[static_cast<std::size_t>(i)]);
        }
    }
    return tr;
}

SimpleTensorTrace simple_tensor_simple_trace(Weight w1, Weight w2, const Params& params) {
    validate(params);
    SimpleTensorTrace tr;
    tr.left = steinberg_factorize(w1, params);
    tr.right = steinberg_factorize(w2, params);

    const auto layer = [](const TwistLabel& lbl, long long lv) -> Weight {
        if (lv == -1) {
            return lbl.qlevel;
        }
        return lv <= height(lbl) ? lbl.levels[static_cast<std::size_t>(lv)] : Weight{0, 0};
    };

    const long long top = std::max(height(tr.left), height(tr.right));
    for (long long lv = -1; lv <= top; ++lv) {
        const long long modulus = lv == -1 ? params.ell : params.p;
        tr.layers.push_back(strike_out(layer(tr.left, lv), layer(tr.right, lv), modulus));
    }

    // One output label per choice of survivor at every layer; each choice
    // contributes multiplicity one.
    std::vector<std::size_t> idx(tr.layers.size(), 0);
    while (true) {
        TwistLabel lbl;
        lbl.qlevel = tr.layers[0].survivors[idx[0]];
        for (std::size_t k = 1; k < tr.layers.size(); ++k) {
            lbl.levels.push_back(tr.layers[k].survivors[idx[k]]);
        }
        tr.result.summands[canonicalize_label(lbl, params)] += 1;

        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == tr.layers[k].survivors.size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == idx.size()) {
            break;
        }
    }
    return tr;
}

ClassVector simple_tensor_simple(Weight w1, Weight w2, const Params& params) {
    return simple_tensor_simple_trace(w1, w2, params).result;
}

ClassVector normalize_product(const std::vector<TwistLabel>& factors, const Params& params) {
    validate(params);
    for (const auto& f : factors) {
        if (!all_dominant(f)) {
            throw std::invalid_argument("normalize_product: factor layers must be dominant");
        }
    }

    // A state is one branch of the cascade: the layers already fixed, the
    // carry still travelling upward, and the accumulated multiplicity.
    struct State {
        std::vector<Weight> emitted;
        bool has_carry = false;
        Weight carry{};
        Int mult = 1;
    };

    long long max_h = -1;
    for (const auto& f : factors) {
        max_h = std::max(max_h, height(f));
    }

    std::vector<State> states(1);
    for (long long level = -1;; ++level) {
        const bool any_carry = std::any_of(
            states.begin(), states.end(), [](const State& s) { return s.has_carry; });
        if (level > max_h && !any_carry) {
            break;
        }

        std::vector<Weight> inputs;
        for (const auto& f : factors) {
            const Weight w = level == -1               ? f.qlevel
                             : level <= height(f)      ? f.levels[static_cast<std::size_t>(level)]
                                                       : Weight{0, 0};
            if (w != Weight{0, 0}) {
                inputs.push_back(w);
            }
        }

        const long long modulus = level == -1 ? params.ell : params.p;
        std::vector<State> next;
        next.reserve(states.size());
        for (const State& st : states) {
            std::vector<Weight> fs = inputs;
            if (st.has_carry) {
                fs.push_back(st.carry);
            }

            const auto emit = [&](Weight w, const Int& mu) {
                State ns = st;
                ns.mult *= mu;
                if (in_pi(w, modulus)) {
                    ns.emitted.push_back(w);
                    ns.has_carry = false;
                } else {
                    const RegionSplit split = split_outside(w, modulus);
                    ns.emitted.push_back(split.core);
                    ns.has_carry = true;
                    ns.carry = split.carry;
                }
                next.push_back(std::move(ns));
            };

            if (fs.empty()) {
                State ns = st;
                ns.emitted.push_back({0, 0});
                ns.has_carry = false;
                next.push_back(std::move(ns));
            } else if (fs.size() == 1) {
                // A lone factor is already a tilting class; no character
                // round trip is needed.
                emit(fs.front(), 1);
            } else {
                Character ch = monomial_character(0, 0);
                for (const Weight w : fs) {
                    ch *= level == -1 ? tilting_character(w, params)
                                      : tilting_character(w, params.p);
                }
                const auto parts = level == -1 ? decompose_tiltings(ch, params)
                                               : decompose_tiltings(ch, params.p);
                for (const auto& [w, mu] : parts) {
                    emit(w, mu);
                }
            }
        }
        states = std::move(next);
    }

    ClassVector out;
    for (const State& st : states) {
        TwistLabel lbl;
        lbl.qlevel = st.emitted.front();
        lbl.levels.assign(st.emitted.begin() + 1, st.emitted.end());
        out.summands[canonicalize_label(lbl, params)] += st.mult;
    }
    return out;
}

ClassVector donkin_normalize(const TwistLabel& lbl, const Params& params) {
    return normalize_product({lbl}, params);
}

ClassVector multiply(const ClassVector& x, const ClassVector& y, const Params& params) {
    validate(params);
    ClassVector out;
    for (const auto& [u, mu] : x.summands) {
        for (const auto& [v, nv] : y.summands) {
            add_scaled(out, normalize_product({u, v}, params), mu * nv);
        }
    }
    return out;
}

} // namespace qtilt
