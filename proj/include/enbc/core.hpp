#ifndef ENBC_KIT_CORE_HPP
#define ENBC_KIT_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enbc {

/// Ground-set subsets (and simplicial-complex faces) as bit masks.
/// Everything in this library is desk scale; 64 bits is plenty for the
/// 2(n+1) vertices of the extended complexes.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool contains(Mask m, int i) { return (m >> i) & 1; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        int i = std::countr_zero(m);
        out.push_back(i);
        m &= m - 1;
    }
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& v) {
    Mask m = 0;
    for (int i : v) m |= bit(i);
    return m;
}

/// Visit every submask of m (including m itself and 0).
template <class F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    for (;;) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

enum class Errc {
    LoopDetected,
    ParallelDetected,
    EmptyMatrix,
    IndexOutOfRange,
    NotDivisible,
    DegreeTooSmall,
    DependentInput,
    AmbientMismatch,
    ResourceLimit,
    NotAGenerator,
    PoleAtZero,
    NonUnitDenominator,
    EmptyComplex,
    SignViolation,
    MalformedJson,
    BadEntry,
    UnknownCommand,
    DegreeMismatch,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace enbc

#endif // ENBC_KIT_CORE_HPP
