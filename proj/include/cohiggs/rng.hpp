#pragma once

#include "cohiggs/sections.hpp"

#include <cstdint>

namespace cohiggs {

/// splitmix64: tiny, platform-independent, splittable. Standard-library
/// distributions are implementation-defined, so all randomness used in
/// verification reports goes through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Derives an independent stream for one trial; trials are order-free.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mix(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

/// Small exact values for seeded trials. Coefficients default to integers
/// with |n| <= bound (the CLI exposes a flag to widen).
class Gen {
public:
    explicit Gen(SplitMix64 rng, long bound = 9) : rng_(rng), bound_(bound) {}

    std::uint64_t raw() { return rng_.next(); }
    long int_in(long lo, long hi);  // inclusive
    long small_int() { return int_in(-bound_, bound_); }
    long nonzero_int();
    bool coin() { return (rng_.next() & 1) != 0; }

    Rational rational();           // small numerator, denominator in 1..3
    Rational nonzero_rational();
    GaussianRational gaussian();
    GaussianRational nonzero_gaussian();
    Scalar scalar() { return Scalar(gaussian()); }
    Scalar nonzero_scalar() { return Scalar(nonzero_gaussian()); }

    AffinePoly poly(int max_degree);
    AffinePoly nonzero_poly(int max_degree);
    HomogeneousForm3 form(int degree);
    HomogeneousForm3 nonzero_form(int degree);

    SectionOk section_ok(int k);
    SectionOk nonzero_section_ok(int k);
    SectionTm1 section_tm1();
    SectionTm1 nonzero_section_tm1();
    SectionT section_t();
    SectionT nonzero_section_t();

    ScalarMatrix matrix(int rows, int cols);
    ScalarMatrix invertible_matrix2();

    PointP2 point_all_coords_nonzero();

private:
    SplitMix64 rng_;
    long bound_;
};

}  // namespace cohiggs
