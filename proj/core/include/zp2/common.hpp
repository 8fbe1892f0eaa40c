#ifndef ZP2_COMMON_HPP
#define ZP2_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace zp2 {

// All counts, masses and group orders are exact; cpp_int never overflows.
using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ragged rows, mismatched dimensions.
struct ShapeError : Error {
    using Error::Error;
};

// Non-prime modulus, parameters outside the defined domain, p != 2 where
// quaternary-only operations are requested.
struct DomainError : Error {
    using Error::Error;
};

// A stated hypothesis of one of the counting lemmas does not hold for the
// given input (e.g. residue code not self-orthogonal).  These are caller
// errors, not internal bugs.
struct PreconditionError : Error {
    using Error::Error;
};

// Exhaustive searches refuse to run past their configured budget.
struct BudgetError : Error {
    using Error::Error;
};

// An internal cross-check failed (non-integral mass, orbit/stabilizer
// mismatch).  Indicates a bug, never bad input.
struct ConsistencyError : Error {
    using Error::Error;
};

inline Bigint bigint_pow(uint64_t base, uint64_t exp) {
    Bigint r = 1;
    Bigint b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline Bigint factorial(uint64_t n) {
    Bigint r = 1;
    for (uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::string to_decimal(const Bigint& v) { return v.str(); }

// Run fn(i) for i in [0, count) across the given number of workers.
// Worker w owns the indices congruent to w mod workers; callers keep
// per-index state so merges never depend on scheduling.
template <typename Fn>
void parallel_for(size_t count, size_t workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&fn, w, workers, count] {
            for (size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace zp2

#endif
