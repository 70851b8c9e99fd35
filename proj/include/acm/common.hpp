#ifndef ACM_COMMON_HPP
#define ACM_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace acm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Raised when the field characteristic is too small for derivative-based
// multiplicity conditions to be faithful.
struct CharacteristicError : Error {
    using Error::Error;
};

struct GenericityError : Error {
    using Error::Error;
};

struct FeasibilityError : Error {
    using Error::Error;
};

struct EmptySystemError : Error {
    using Error::Error;
};

struct NonIsolatedSingularityError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Exact binomial coefficient; throws Error on int64 overflow.
long long binomial(long long n, long long k);

// Integer square root: largest s with s*s <= n (n >= 0).
long long isqrt(long long n);

// Worker-thread knob for the dense linear algebra kernels. Results are
// bit-identical for any setting; default is 1.
void set_worker_threads(int n);
int worker_threads();

// Runs fn(begin, end) over a partition of [0, n) using the configured
// worker count. fn must only touch its own index range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace acm

#endif
