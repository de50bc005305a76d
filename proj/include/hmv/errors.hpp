#pragma once

#include <stdexcept>
#include <string>

namespace hmv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HMV_DEFINE_ERROR(name)                                       \
    struct name : error {                                            \
        name() : error(#name) {}                                     \
        explicit name(const std::string& what) : error(what) {}      \
    }

HMV_DEFINE_ERROR(parse_error);
HMV_DEFINE_ERROR(invalid_discriminant);
HMV_DEFINE_ERROR(discriminant_mismatch);
HMV_DEFINE_ERROR(division_by_zero);
HMV_DEFINE_ERROR(negative_discriminant);
HMV_DEFINE_ERROR(square_discriminant);
HMV_DEFINE_ERROR(zero_ideal);
HMV_DEFINE_ERROR(not_an_ideal);
HMV_DEFINE_ERROR(not_invertible);
HMV_DEFINE_ERROR(conductor_divides);
HMV_DEFINE_ERROR(not_coprime_to_conductor);
HMV_DEFINE_ERROR(not_primitive);
HMV_DEFINE_ERROR(wrong_norm);
HMV_DEFINE_ERROR(not_smart_basis);
HMV_DEFINE_ERROR(degenerate_form);
HMV_DEFINE_ERROR(rank_deficient);
HMV_DEFINE_ERROR(not_direct_sum);
HMV_DEFINE_ERROR(wrong_orders);
HMV_DEFINE_ERROR(decomposition_fails);
HMV_DEFINE_ERROR(norm_mismatch);
HMV_DEFINE_ERROR(not_in_gamma);
HMV_DEFINE_ERROR(degenerate_line);
HMV_DEFINE_ERROR(singular_gram);
HMV_DEFINE_ERROR(coincident_points);
HMV_DEFINE_ERROR(phase_not_representable);
HMV_DEFINE_ERROR(unsupported_stratum);

#undef HMV_DEFINE_ERROR

} // namespace hmv
