#include "levelbound/method.hpp"

namespace levelbound {

std::string_view to_string(MethodId m) {
  switch (m) {
    case MethodId::type0: return "type0";
    case MethodId::type1: return "type1";
    case MethodId::viscosity_c: return "viscosity";
    case MethodId::visit_cl: return "visit-probability";
    case MethodId::recursive_lower: return "recursive-lower";
    case MethodId::recursive_upper: return "recursive-upper";
    case MethodId::digraph_product_lower: return "digraph-product";
    case MethodId::ratio_lower: return "ratio-lower";
    case MethodId::conditional_upper: return "conditional-upper";
    case MethodId::ratio_upper: return "ratio-upper";
    case MethodId::paper_analytic: return "paper-analytic";
  }
  return "unknown";
}

std::string_view to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

std::optional<MethodId> parse_method(std::string_view name) {
  for (MethodId m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<Direction> direction_of(MethodId m) {
  switch (m) {
    case MethodId::type0:
    case MethodId::viscosity_c:
    case MethodId::visit_cl:
    case MethodId::recursive_lower:
    case MethodId::digraph_product_lower:
    case MethodId::ratio_lower:
      return Direction::lower;
    case MethodId::type1:
    case MethodId::recursive_upper:
    case MethodId::conditional_upper:
    case MethodId::ratio_upper:
      return Direction::upper;
    case MethodId::paper_analytic:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace levelbound
