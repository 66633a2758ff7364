#include "szkit/errors.hpp"

namespace szkit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string describe(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += "; ";
    if (d.gate) out += "g" + std::to_string(*d.gate) + ": ";
    out += d.message;
  }
  return out;
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : InputError("invalid circuit: " + describe(diags)), diags_(std::move(diags)) {}

BudgetExhausted::BudgetExhausted(const std::string& what, std::uint64_t trials)
    : GuardError(what + " (" + std::to_string(trials) + " trials)"), trials_(trials) {}

}  // namespace szkit
