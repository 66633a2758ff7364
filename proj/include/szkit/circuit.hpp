#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szkit/bigint.hpp"
#include "szkit/errors.hpp"

namespace szkit {

enum class GateKind { Var, Param, Const, Add, Mul };

const char* to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::Const;
  // Variable or parameter name for Var/Param, operand indices for Add/Mul.
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  Int value;

  static Gate var(std::size_t name);
  static Gate param(std::size_t name);
  static Gate constant(const Int& v);
  static Gate add(std::size_t i, std::size_t j);
  static Gate mul(std::size_t i, std::size_t j);

  bool is_input() const { return kind == GateKind::Var || kind == GateKind::Param || kind == GateKind::Const; }
  friend bool operator==(const Gate& a, const Gate& b);
};

// An unchecked circuit value, used to build and to validate candidates.
struct RawCircuit {
  std::vector<Gate> gates;
  std::size_t output = 0;
  std::size_t n_vars = 0;
  std::size_t n_params = 0;
  std::map<std::size_t, Int> plugged;
};

std::vector<Diagnostic> validate(const RawCircuit& raw);

class Circuit {
 public:
  // Throws ValidationError listing every violated invariant.
  explicit Circuit(RawCircuit raw);

  // n_vars and n_params are the largest names used; output defaults to the last gate.
  explicit Circuit(std::vector<Gate> gates, std::optional<std::size_t> output = std::nullopt,
                   std::map<std::size_t, Int> plugged = {});

  const std::vector<Gate>& gates() const { return raw_.gates; }
  const Gate& gate(std::size_t i) const { return raw_.gates.at(i); }
  std::size_t size() const { return raw_.gates.size(); }
  std::size_t output() const { return raw_.output; }
  std::size_t n_vars() const { return raw_.n_vars; }
  std::size_t n_params() const { return raw_.n_params; }
  const std::map<std::size_t, Int>& plugged() const { return raw_.plugged; }
  bool fully_plugged() const { return raw_.plugged.size() == raw_.n_params; }

  // Gate indices reachable from the output, ascending.
  std::vector<std::size_t> output_cone() const;

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  RawCircuit raw_;
};

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

// Serialized bit length of the canonical text form.
std::size_t representation_size(const Circuit& c);

struct DegreeReport {
  Int total;
  // Keys are "x<j>" for variables, "p<j>" for parameters and "g<k>" for the
  // constant at gate k.
  std::map<std::string, Int> individual;
  Int max_individual;
  // var_degrees[j - 1] is the individual degree on x_j.
  std::vector<Int> var_degrees;

  Int max_var_individual() const;
};

DegreeReport analyze_degrees(const Circuit& c);

// Plugged parameters become constants; remaining parameters are renumbered 1.. in order.
Circuit plug_parameters(const Circuit& c);
// Constants become fresh plugged parameters numbered after the existing ones.
Circuit lift_constants(const Circuit& c);

// Incremental construction of well-formed circuits.
class CircuitBuilder {
 public:
  std::size_t var(std::size_t name);
  std::size_t param(std::size_t name);
  std::size_t constant(const Int& v);
  std::size_t add(std::size_t i, std::size_t j);
  std::size_t mul(std::size_t i, std::size_t j);
  std::size_t neg(std::size_t i);
  std::size_t sub(std::size_t i, std::size_t j);
  void plug(std::size_t param_name, const Int& v);

  std::size_t size() const { return gates_.size(); }
  Circuit build(std::optional<std::size_t> output = std::nullopt) const;

 private:
  std::size_t push(Gate g);
  std::vector<Gate> gates_;
  std::map<std::size_t, Int> plugged_;
};

// The single-gate circuit computing the constant 0.
Circuit zero_circuit();

}  // namespace szkit
