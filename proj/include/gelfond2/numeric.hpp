#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gelfond2 {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a certified computation cannot resolve within the
/// configured precision cap. Callers map this to a resource error,
/// never to a silently widened result.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Default escalation cap, in bits of working precision.
inline constexpr long kDefaultPrecisionCap = 4096;

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int ceil_rat(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

/// Nearest integer; halves round toward +infinity (deterministic).
inline Int round_rat(const Rat& q) {
    return floor_rat(q + Rat(1, 2));
}

/// 2^k as an exact rational, k may be negative.
inline Rat pow2_rat(long k) {
    Rat r;
    if (k >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(k));
    } else {
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-k));
    }
    return r;
}

inline Int pow2_int(unsigned long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

/// Largest dyadic m/2^bits <= q.
inline Rat dyadic_floor(const Rat& q, long bits) {
    Rat scaled = q * pow2_rat(bits);
    return Rat(floor_rat(scaled)) * pow2_rat(-bits);
}

/// Smallest dyadic m/2^bits >= q.
inline Rat dyadic_ceil(const Rat& q, long bits) {
    Rat scaled = q * pow2_rat(bits);
    return Rat(ceil_rat(scaled)) * pow2_rat(-bits);
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// floor(log2 |q|) for q != 0, exact.
long floor_log2(const Rat& q);

/// FNV-1a over a byte string; used for cache keys, not security.
std::uint64_t fnv1a64(const std::string& data);

std::string to_hex(std::uint64_t v);

}  // namespace gelfond2
