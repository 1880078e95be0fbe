#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace levelbound {

enum class Direction { lower, upper };

/// Coefficient families for linear fitness-level bounds.
enum class MethodId {
  type0,                  // c = 0 (lower)
  type1,                  // c = 1 (upper)
  viscosity_c,            // single constant c (lower)
  visit_cl,               // per-level visit probability c_l (lower)
  recursive_lower,        // equality in the r_min recursion
  recursive_upper,        // equality in the r_max recursion
  digraph_product_lower,  // product of r_min(i, [l, i-1]) along the full path
  ratio_lower,            // product form from two probability bounds
  conditional_upper,      // r_max(k, [l, k-1])
  ratio_upper,            // single-factor form from two probability bounds
  paper_analytic,         // ratio forms fed by closed-form binomial-sum bounds
};

inline constexpr std::array<MethodId, 11> kAllMethods = {
    MethodId::type0,           MethodId::type1,
    MethodId::viscosity_c,     MethodId::visit_cl,
    MethodId::recursive_lower, MethodId::recursive_upper,
    MethodId::digraph_product_lower, MethodId::ratio_lower,
    MethodId::conditional_upper, MethodId::ratio_upper,
    MethodId::paper_analytic,
};

std::string_view to_string(MethodId m);
std::string_view to_string(Direction d);
std::optional<MethodId> parse_method(std::string_view name);

/// Direction the method bounds from; nullopt for paper_analytic, which has both.
std::optional<Direction> direction_of(MethodId m);

}  // namespace levelbound
