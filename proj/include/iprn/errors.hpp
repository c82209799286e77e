#pragma once

#include <stdexcept>
#include <string>

namespace iprn {

// Base for all library errors surfaced to callers / the CLI (exit 2).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic left the representable 64-bit range. Never wrapped silently.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// A configured cap (enumeration size, row count, ...) was exceeded.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// A wall-clock budget ran out mid-search (CLI exit 3).
struct BudgetExceeded : Error {
    long long nodes = 0;
    explicit BudgetExceeded(const std::string& what, long long nodes_visited)
        : Error(what), nodes(nodes_visited) {}
};

}  // namespace iprn
