#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bdq {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    enum class Kind { InvalidInput, GuardExceeded, Internal };
    Kind kind;
    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error invalid(const std::string& msg) { return Error(Error::Kind::InvalidInput, msg); }
inline Error guard_exceeded(const std::string& msg) { return Error(Error::Kind::GuardExceeded, msg); }

// Parses "p" or "p/q"; result is canonical with positive denominator.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw invalid("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw invalid("bad rational literal: " + s);
    if (q.get_den() == 0) throw invalid("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace bdq
