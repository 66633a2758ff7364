#include "szkit/evaluator.hpp"

namespace szkit {

Evaluator::Evaluator(Circuit c, const Int& degree_bound, EvalLimits limits)
    : c_(std::move(c)), limits_(limits), cone_(c_.output_cone()) {
  total_ = analyze_degrees(c_).total;
  if (total_ > degree_bound) {
    throw DegreeBoundError("syntactic total degree " + to_string(total_) + " exceeds bound " +
                           to_string(degree_bound));
  }
}

template <class Load>
Int Evaluator::run(Load&& load_var, std::span<const Int> params) const {
  std::vector<Int> val(c_.size());
  for (std::size_t i : cone_) {
    const Gate& g = c_.gate(i);
    switch (g.kind) {
      case GateKind::Var: load_var(g.lhs, val[i]); break;
      case GateKind::Param: {
        auto it = c_.plugged().find(g.lhs);
        if (it != c_.plugged().end()) {
          val[i] = it->second;
        } else if (params.size() == c_.n_params()) {
          val[i] = params[g.lhs - 1];
        } else {
          throw DimensionError("parameter p" + std::to_string(g.lhs) + " is neither plugged nor assigned");
        }
        break;
      }
      case GateKind::Const: val[i] = g.value; break;
      case GateKind::Add: val[i] = val[g.lhs] + val[g.rhs]; break;
      case GateKind::Mul: val[i] = val[g.lhs] * val[g.rhs]; break;
    }
    if (bitlen(val[i]) > limits_.bitlen_guard) {
      throw BitLengthExceeded("value at g" + std::to_string(i) + " exceeds " + std::to_string(limits_.bitlen_guard) +
                              " bits");
    }
  }
  return val[c_.output()];
}

Int Evaluator::operator()(const Assignment& asg) const {
  if (asg.vars.size() != c_.n_vars()) {
    throw DimensionError("expected " + std::to_string(c_.n_vars()) + " variable values, got " +
                         std::to_string(asg.vars.size()));
  }
  if (!asg.params.empty() && asg.params.size() != c_.n_params()) {
    throw DimensionError("expected " + std::to_string(c_.n_params()) + " parameter values, got " +
                         std::to_string(asg.params.size()));
  }
  return run([&](std::size_t j, Int& out) { out = asg.vars[j - 1]; }, asg.params);
}

Int Evaluator::operator()(std::span<const Int> point) const {
  if (point.size() < c_.n_vars()) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, circuit has " +
                         std::to_string(c_.n_vars()) + " variables");
  }
  return run([&](std::size_t j, Int& out) { out = point[j - 1]; }, {});
}

Int Evaluator::operator()(std::span<const std::uint64_t> point) const {
  if (point.size() < c_.n_vars()) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, circuit has " +
                         std::to_string(c_.n_vars()) + " variables");
  }
  return run([&](std::size_t j, Int& out) { out = from_u64(point[j - 1]); }, {});
}

Int eval_arithmetic(const Circuit& c, const Assignment& asg, const Int& degree_bound, EvalLimits limits) {
  return Evaluator(c, degree_bound, limits)(asg);
}

}  // namespace szkit
