#include "diam/estimate.hpp"

#include <array>
#include <utility>

namespace diam {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::Exact, "exact"},
    {Method::TwoApprox, "two-approx"},
    {Method::Agarwal, "agarwal"},
    {Method::Chan, "chan"},
    {Method::Paper, "paper"},
}};

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [method, n] : kMethodNames)
    if (n == name) return method;
  return std::nullopt;
}

}  // namespace diam
