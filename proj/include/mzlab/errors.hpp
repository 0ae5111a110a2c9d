#ifndef MZLAB_ERRORS_HPP
#define MZLAB_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mzlab {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- ring / polynomial layer ----

struct ring_mismatch_error : error {
    explicit ring_mismatch_error(const std::string& msg) : error("ring mismatch: " + msg) {}
};

struct non_invertible_image_error : error {
    explicit non_invertible_image_error(const std::string& msg)
        : error("non-invertible image: " + msg) {}
};

struct not_a_unit_error : error {
    explicit not_a_unit_error(const std::string& msg) : error("not a unit: " + msg) {}
};

// ---- parser ----

struct parse_error : error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct negative_exponent_error : parse_error {
    negative_exponent_error(size_t pos)
        : parse_error("negative exponent requires a Laurent ambient", pos) {}
};

struct unknown_variable_error : parse_error {
    unknown_variable_error(const std::string& name, size_t pos)
        : parse_error("unknown variable '" + name + "'", pos) {}
};

// ---- maps ----

struct not_locally_nilpotent_error : error {
    int cap;
    not_locally_nilpotent_error(const std::string& what_about, int cap_)
        : error("series did not terminate within cap " + std::to_string(cap_) + " on " +
                what_about),
          cap(cap_) {}
};

// ---- windows / subspaces ----

struct out_of_window_error : error {
    explicit out_of_window_error(const std::string& msg) : error("out of window: " + msg) {}
};

struct target_overflow_error : error {
    explicit target_overflow_error(const std::string& monomial)
        : error("image of " + monomial + " escapes the target window") {}
};

struct not_in_radical_error : error {
    int power;
    explicit not_in_radical_error(int m)
        : error("candidate power m=" + std::to_string(m) +
                " is not in the subspace; falsification certificate impossible"),
          power(m) {}
};

struct precondition_failed_error : error {
    explicit precondition_failed_error(const std::string& identity)
        : error("precondition failed: " + identity) {}
};

// ---- finite algebras ----

struct budget_exceeded_error : error {
    explicit budget_exceeded_error(const std::string& msg) : error("budget exceeded: " + msg) {}
};

struct unsupported_over_q_error : error {
    explicit unsupported_over_q_error(const std::string& msg)
        : error("unsupported over Q: " + msg) {}
};

struct non_split_error : error {
    explicit non_split_error(const std::string& msg)
        : error("characteristic polynomial does not split: " + msg) {}
};

struct not_commutative_error : error {
    not_commutative_error() : error("algebra is not commutative") {}
};

struct characteristic_too_small_error : error {
    explicit characteristic_too_small_error(const std::string& msg)
        : error("characteristic too small: " + msg) {}
};

struct decomposition_mismatch_error : error {
    explicit decomposition_mismatch_error(const std::string& msg)
        : error("decomposition mismatch: " + msg) {}
};

// ---- polytope ----

struct zero_polynomial_error : error {
    zero_polynomial_error() : error("zero polynomial has no support") {}
};

// ---- cli ----

struct unknown_example_error : error {
    explicit unknown_example_error(const std::string& id)
        : error("unknown example id '" + id + "'") {}
};

struct usage_error : error {
    explicit usage_error(const std::string& msg) : error(msg) {}
};

}  // namespace mzlab

#endif
