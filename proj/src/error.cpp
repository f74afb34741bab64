#include "heron/error.hpp"

namespace heron {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::negative_sqrt: return "negative_sqrt";
    case ErrorCode::parse: return "parse";
    case ErrorCode::pole: return "pole";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::range: return "range";
    case ErrorCode::out_of_domain: return "out_of_domain";
    case ErrorCode::not_in_family: return "not_in_family";
    case ErrorCode::not_heron: return "not_heron";
    case ErrorCode::invalid_input: return "invalid_input";
  }
  return "unknown";
}

}  // namespace heron
