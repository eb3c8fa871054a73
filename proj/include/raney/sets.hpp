#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace raney {

// Subsets of {0..63} as machine words. Every carrier in this library
// (lattice elements, sublocale carriers, finite complements of cofinite
// sets) fits in 64 bits by construction.
using Bits = std::uint64_t;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline int popcount(Bits b) { return std::popcount(b); }
inline bool has_bit(Bits b, int i) { return (b >> i) & Bits{1}; }
inline Bits bit(int i) { return Bits{1} << i; }
inline bool is_subset(Bits a, Bits b) { return (a & ~b) == 0; }

inline Bits full_mask(int n) {
    if (n < 0 || n > 64) throw error("mask width out of range");
    return n == 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

inline int lowest_bit(Bits b) { return std::countr_zero(b); }

template <class F>
void for_each_bit(Bits b, F&& f) {
    while (b) {
        f(std::countr_zero(b));
        b &= b - 1;
    }
}

// Iterate all subsets of `mask`, including 0 and mask itself.
template <class F>
void for_each_subset(Bits mask, F&& f) {
    Bits s = 0;
    while (true) {
        f(s);
        if (s == mask) break;
        s = (s - mask) & mask;
    }
}

}  // namespace raney
