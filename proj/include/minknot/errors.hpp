#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace minknot {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (N,p) or (N,q) share a factor: the curve is singular for every phase.
struct non_coprime_error : error {
    non_coprime_error(const std::string& pair_name, int a, int b)
        : error("gcd(" + pair_name + ") must be 1, got gcd(" + std::to_string(a) + "," +
                std::to_string(b) + ") = " + std::to_string(std::gcd(a, b))),
          a(a),
          b(b) {}
    int a, b;
};

struct out_of_range_error : error {
    using error::error;
};

// Phase at which two strands genuinely intersect.
struct critical_phase_error : error {
    using error::error;
};

struct level_collision_error : error {
    using error::error;
};

struct degenerate_sign_error : error {
    using error::error;
};

struct formula_mismatch_error : error {
    using error::error;
};

struct not_a_knot_error : error {
    using error::error;
};

struct not_symmetric_error : error {
    using error::error;
};

struct strand_limit_error : error {
    using error::error;
};

struct unresolved_crossing_error : error {
    using error::error;
};

struct schema_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

}  // namespace minknot
