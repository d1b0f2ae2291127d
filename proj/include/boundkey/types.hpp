// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace boundkey {

enum class Party { A, B, E };

enum class Direction { AtoB, BtoA };

inline const char* party_name(Party p) {
    switch (p) {
        case Party::A: return "A";
        case Party::B: return "B";
        default: return "E";
    }
}

inline const char* direction_name(Direction d) {
    return d == Direction::AtoB ? "A->B" : "B->A";
}

// Grid cell (a,b): row = Alice symbol, column = Bob symbol.
struct Cell {
    int a = 0;
    int b = 0;
    auto operator<=>(const Cell&) const = default;
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousEve : std::runtime_error {
    explicit AmbiguousEve(const std::string& what) : std::runtime_error(what) {}
};

struct SupportMismatch : std::runtime_error {
    explicit SupportMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnambiguous : std::runtime_error {
    explicit NotUnambiguous(const std::string& what) : std::runtime_error(what) {}
};

struct NotIsometry : std::runtime_error {
    explicit NotIsometry(const std::string& what) : std::runtime_error(what) {}
};

struct EigenFailure : std::runtime_error {
    explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct NoFeasiblePoint : std::runtime_error {
    explicit NoFeasiblePoint(const std::string& what) : std::runtime_error(what) {}
};

struct SizeGuard : std::runtime_error {
    explicit SizeGuard(const std::string& what) : std::runtime_error(what) {}
};

struct NoneFound : std::runtime_error {
    explicit NoneFound(const std::string& what) : std::runtime_error(what) {}
};

struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

// Entries strictly above this count as nonzero support.
inline constexpr double kZeroThreshold = 1e-12;

// Published matrices are rounded to six decimals; checks against them use
// this looser tolerance.
inline constexpr double kFixtureTol = 5e-6;

// Loaded pmfs whose total is within this of 1 are renormalized; anything
// further off is rejected.
inline constexpr double kLoadTol = 5e-6;

}  // namespace boundkey
