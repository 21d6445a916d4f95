#include "vhl/instance.hpp"

#include <cmath>

namespace vhl {
namespace {

std::string bad_entry(double v) {
  if (std::isnan(v)) return "NaN cost";
  return "negative cost " + std::to_string(v);
}

void scan_matrix(const CostMatrix& m, const std::string& name,
                 std::vector<std::string>& issues) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      double v = m.row(r)[c];
      if (!(v >= 0.0)) {
        issues.push_back(name + "(" + std::to_string(r) + "," + std::to_string(c) +
                         "): " + bad_entry(v));
      }
    }
  }
}

}  // namespace

ValidationReport validate(const HmmInstance& inst, const ObservationSequence& obs) {
  ValidationReport report;
  auto& issues = report.issues;

  if (inst.n <= 0) issues.push_back("n: must be positive");
  if (inst.sigma <= 0) issues.push_back("sigma: must be positive");
  if (inst.transition.rows() != inst.n || inst.transition.cols() != inst.n) {
    issues.push_back("A: dimension mismatch, expected " + std::to_string(inst.n) + "x" +
                     std::to_string(inst.n) + ", got " +
                     std::to_string(inst.transition.rows()) + "x" +
                     std::to_string(inst.transition.cols()));
  }
  if (inst.emission.rows() != inst.n || inst.emission.cols() != inst.sigma) {
    issues.push_back("B: dimension mismatch, expected " + std::to_string(inst.n) + "x" +
                     std::to_string(inst.sigma) + ", got " +
                     std::to_string(inst.emission.rows()) + "x" +
                     std::to_string(inst.emission.cols()));
  }
  if (inst.start_state < 0 || inst.start_state >= inst.n) {
    issues.push_back("start_state: " + std::to_string(inst.start_state) +
                     " out of range [0," + std::to_string(inst.n) + ")");
  }

  scan_matrix(inst.transition, "A", issues);
  scan_matrix(inst.emission, "B", issues);

  for (int t = 0; t < obs.length(); ++t) {
    int s = obs.symbols[t];
    if (s < 0 || s >= inst.sigma) {
      issues.push_back("obs[" + std::to_string(t) + "]: symbol " + std::to_string(s) +
                       " out of range [0," + std::to_string(inst.sigma) + ")");
    }
  }
  return report;
}

}  // namespace vhl
