#pragma once

#include "qtilt/fusion.hpp"
#include "qtilt/twist_label.hpp"
#include "qtilt/weight.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtilt {

/// Thrown when the cache location cannot be created or written.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableOptions {
    Params params{2, 3};
    long long max_length = 0;
    std::filesystem::path cache_dir;
    std::size_t workers = 0;   // 0 picks the hardware concurrency
};

struct TableStats {
    std::size_t labels = 0;      // basis labels within the length bound
    std::size_t records = 0;     // unordered pairs, including equal pairs
    std::size_t reused = 0;      // records taken unchanged from the cache
    std::size_t recomputed = 0;  // records computed this run
    std::size_t dropped = 0;     // cached records outside the current scope
    std::filesystem::path file;
};

/// Determinant-free special canonical labels of length <= max_length, sorted.
/// Every special label is a determinant twist of exactly one of these, so the
/// table over this basis determines all structure constants.
std::vector<TwistLabel> special_labels_up_to(const Params& params, long long max_length);

/// Builds or refreshes the multiplication table for the given parameters: one
/// JSON-lines file per parameter pair, with a versioned header line followed
/// by one checksummed record per basis pair (left <= right).  Existing records
/// whose checksums validate are reused; corrupt or missing ones are
/// recomputed on a worker pool; records outside the requested bound are
/// dropped.  The file is replaced atomically.  Progress counts go to *log
/// when it is non-null.  Throws CacheError when the cache location is not
/// writable.
TableStats generate_table(const TableOptions& opts, std::ostream* log = nullptr);

/// FNV-1a 64-bit hash of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace qtilt
