#include "qtilt/table.hpp"

#include "qtilt/json_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>

namespace qtilt {

namespace {

constexpr const char* kFormat = "qtilt-table";
constexpr long long kVersion = 1;

std::string pair_key(const Json& left, const Json& right) {
    return left.dump() + "|" + right.dump();
}

Json record_body(const Json& left, const Json& right, const Json& product) {
    return Json{{"left", left}, {"right", right}, {"product", product}};
}

Json checksummed(Json body) {
    body["checksum"] = fnv1a_hex(body.dump());
    return body;
}

// A cached record is trusted only if its checksum matches the body it claims
// to summarize.
bool record_valid(const Json& rec) {
    if (!rec.is_object() || !rec.contains("left") || !rec.contains("right") ||
        !rec.contains("product") || !rec.contains("checksum") ||
        !rec.at("checksum").is_string()) {
        return false;
    }
    const Json body = record_body(rec.at("left"), rec.at("right"), rec.at("product"));
    return rec.at("checksum").get<std::string>() == fnv1a_hex(body.dump());
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::vector<TwistLabel> special_labels_up_to(const Params& params, long long max_length) {
    validate(params);
    if (max_length < 0) {
        throw std::invalid_argument("table: negative length bound");
    }
    std::vector<TwistLabel> out;
    std::vector<long long> diffs;   // entry 0 is the quantum layer
    const auto emit = [&]() {
        TwistLabel lbl;
        lbl.qlevel = Weight{diffs[0], 0};
        for (std::size_t i = 1; i < diffs.size(); ++i) {
            lbl.levels.push_back(Weight{diffs[i], 0});
        }
        out.push_back(std::move(lbl));
    };
    // Extends the current prefix by classical layers; only prefixes ending in
    // a nonzero layer are canonical, and recursion stops once even a single
    // unit at the next scale would exceed the bound.
    const std::function<void(long long, long long)> extend = [&](long long scale,
                                                                 long long remaining) {
        if (scale > remaining) {
            return;
        }
        const long long cap = std::min(2 * params.p - 2, remaining / scale);
        for (long long delta = 0; delta <= cap; ++delta) {
            diffs.push_back(delta);
            if (delta > 0) {
                emit();
            }
            extend(scale * params.p, remaining - delta * scale);
            diffs.pop_back();
        }
    };
    for (long long dq = 0; dq <= std::min(2 * params.ell - 2, max_length); ++dq) {
        diffs.assign(1, dq);
        emit();
        extend(params.ell, max_length - dq);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TableStats generate_table(const TableOptions& opts, std::ostream* log) {
    validate(opts.params);
    TableStats stats;

    const std::vector<TwistLabel> labels = special_labels_up_to(opts.params, opts.max_length);
    stats.labels = labels.size();

    std::vector<Json> label_json;
    label_json.reserve(labels.size());
    for (const auto& lbl : labels) {
        label_json.push_back(label_to_json(lbl));
    }

    std::ostringstream name;
    name << "table-l" << opts.params.ell << "-p" << opts.params.p << ".jsonl";
    stats.file = opts.cache_dir / name.str();

    // Load whatever the cache already holds.  A header mismatch discards the
    // whole file; a corrupt record discards just that record.
    std::map<std::string, Json> cached;
    {
        std::ifstream in(stats.file);
        std::string line;
        bool header_ok = false;
        if (in && std::getline(in, line)) {
            const Json header = Json::parse(line, nullptr, false);
            header_ok = header.is_object() && header.value("format", "") == kFormat &&
                        header.value("version", -1) == kVersion &&
                        header.value("l", -1) == opts.params.ell &&
                        header.value("p", -1) == opts.params.p;
        }
        while (header_ok && std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const Json rec = Json::parse(line, nullptr, false);
            if (record_valid(rec)) {
                cached.emplace(pair_key(rec.at("left"), rec.at("right")), rec);
            }
        }
    }

    struct Task {
        std::size_t left;
        std::size_t right;
        std::size_t slot;
    };
    std::vector<Json> records;
    std::vector<Task> todo;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i; j < labels.size(); ++j) {
            const std::string key = pair_key(label_json[i], label_json[j]);
            const auto it = cached.find(key);
            if (it != cached.end()) {
                records.push_back(it->second);
                ++stats.reused;
                cached.erase(it);
            } else {
                records.push_back(Json());
                todo.push_back(Task{i, j, records.size() - 1});
            }
        }
    }
    stats.records = records.size();
    stats.recomputed = todo.size();
    stats.dropped = cached.size();

    if (!todo.empty()) {
        std::size_t workers = opts.workers != 0
                                  ? opts.workers
                                  : std::max<std::size_t>(1, std::thread::hardware_concurrency());
        workers = std::min(workers, todo.size());

        std::atomic<std::size_t> cursor{0};
        const auto run = [&]() {
            for (;;) {
                const std::size_t k = cursor.fetch_add(1);
                if (k >= todo.size()) {
                    return;
                }
                const Task& task = todo[k];
                ClassVector left, right;
                left.summands.emplace(labels[task.left], Int(1));
                right.summands.emplace(labels[task.right], Int(1));
                const ClassVector product = multiply(left, right, opts.params);

                Json product_json = Json::array();
                for (const auto& [lbl, mult] : product.summands) {
                    product_json.push_back(
                        Json{{"label", label_to_json(lbl)}, {"mult", coeff_to_json(mult)}});
                }
                records[task.slot] = checksummed(record_body(
                    label_json[task.left], label_json[task.right], product_json));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back(run);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(opts.cache_dir, ec);
    if (ec) {
        throw CacheError("table: cannot create cache directory " + opts.cache_dir.string());
    }
    const std::filesystem::path tmp = stats.file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) {
            throw CacheError("table: cannot write " + tmp.string());
        }
        out << Json{{"format", kFormat},
                    {"version", kVersion},
                    {"l", opts.params.ell},
                    {"p", opts.params.p},
                    {"max", opts.max_length}}
                   .dump()
            << '\n';
        for (const auto& rec : records) {
            out << rec.dump() << '\n';
        }
        if (!out) {
            throw CacheError("table: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, stats.file, ec);
    if (ec) {
        throw CacheError("table: cannot replace " + stats.file.string());
    }

    if (log != nullptr) {
        *log << "table: " << stats.labels << " labels, " << stats.records << " records ("
             << stats.reused << " reused, " << stats.recomputed << " recomputed, "
             << stats.dropped << " dropped)\n";
    }
    return stats;
}

}  // namespace qtilt
