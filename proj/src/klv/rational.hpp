#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace klv::core {

// Exact rational scalar used throughout.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", "p/q" (optional leading sign, decimal digits only).
// Returns nullopt on malformed input or zero denominator.
std::optional<Rat> rat_parse(const std::string& s);

// Canonical "p/q" or "p" form.
std::string rat_str(const Rat& q);

// q^e for any integer e; e < 0 requires q != 0.
Rat rat_pow(const Rat& q, long e);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace klv::core
