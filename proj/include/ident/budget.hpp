#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace ident {

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error("budget exhausted: " + what) {}
};

struct SelfCheckError : std::runtime_error {
    explicit SelfCheckError(const std::string& what) : std::runtime_error("self-check failed: " + what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line, col;
};

struct JetCapError : std::runtime_error {
    explicit JetCapError(const std::string& what) : std::runtime_error("jet cap exceeded: " + what) {}
};

/*
 * Cooperative resource limits. Long-running algorithms call check points;
 * exceeding a cap throws BudgetError and never alters results.
 */
struct Budget {
    long max_total_degree = 128;
    long max_basis_size = 8192;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static Budget unlimited() { return Budget{1L << 40, 1L << 40, std::nullopt}; }

    void check_degree(long deg, const char* where) const {
        if (deg > max_total_degree)
            throw BudgetError(std::string(where) + ": total degree " + std::to_string(deg) + " > cap " +
                              std::to_string(max_total_degree));
    }
    void check_size(long size, const char* where) const {
        if (size > max_basis_size)
            throw BudgetError(std::string(where) + ": size " + std::to_string(size) + " > cap " +
                              std::to_string(max_basis_size));
    }
    void check_clock(const char* where) const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw BudgetError(std::string(where) + ": wall clock cap hit");
    }
};

}  // namespace ident
