// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqkd/serialization.hpp"

#include <fstream>
#include <sstream>

namespace sqkd {
namespace {

constexpr double kReportTolerance = 1e-12;

std::complex<double> complex_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(what + ": expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(what + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double number_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_number()) throw ParseError(what + ": field '" + key + "' must be a number");
  return v.get<double>();
}

bool bool_field(const Json& j, const char* key, const std::string& what) {
  const Json& v = field(j, key, what);
  if (!v.is_boolean()) throw ParseError(what + ": field '" + key + "' must be a boolean");
  return v.get<bool>();
}

void require_close(double a, double b, const std::string& what) {
  if (!(std::abs(a - b) <= kReportTolerance)) {
    throw ParseError("report: inconsistent " + what + " (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

void require_probability(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParseError("report: " + what + " outside [0, 1]");
}

Json table_to_json(const Eigen::Matrix<double, 2, Eigen::Dynamic>& t) {
  Json rows = Json::array();
  for (Eigen::Index z = 0; z < 2; ++z) {
    Json row = Json::array();
    for (Eigen::Index e = 0; e < t.cols(); ++e) row.push_back(t(z, e));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* relation_name(ProofStep::Relation r) {
  return r == ProofStep::Relation::kEqual ? "=" : "<=";
}

}  // namespace

Json matrix_to_json(const Operator& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Operator m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(what + ": row " + std::to_string(i) + " does not make a square matrix");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], what);
    }
  }
  return m;
}

Json attack_to_json(const AttackModel& attack) {
  Json omega = Json::array();
  for (Eigen::Index k = 0; k < attack.omega.size(); ++k) omega.push_back(complex_to_json(attack.omega(k)));
  Json j = Json::object();
  j["ancilla_dim"] = attack.ancilla_dim;
  j["omega"] = std::move(omega);
  j["V"] = matrix_to_json(attack.v);
  j["U"] = matrix_to_json(attack.u);
  return j;
}

AttackModel attack_from_json(const Json& j) {
  const std::string what = "attack";
  const Json& dim = field(j, "ancilla_dim", what);
  if (!dim.is_number_integer() || dim.get<long long>() < 1) {
    throw ParseError("attack: ancilla_dim must be a positive integer");
  }
  const Json& omega = field(j, "omega", what);
  if (!omega.is_array()) throw ParseError("attack: omega must be an array of [re, im] pairs");
  AttackModel a;
  a.ancilla_dim = dim.get<Eigen::Index>();
  a.omega.resize(static_cast<Eigen::Index>(omega.size()));
  for (std::size_t k = 0; k < omega.size(); ++k) {
    a.omega(static_cast<Eigen::Index>(k)) = complex_from_json(omega[k], "attack omega");
  }
  a.v = matrix_from_json(field(j, "V", what), "attack V");
  a.u = matrix_from_json(field(j, "U", what), "attack U");
  a.validate();
  return a;
}

Json povm_to_json(const Povm& povm) {
  Json els = Json::array();
  for (const Operator& e : povm.elements()) els.push_back(matrix_to_json(e));
  Json j = Json::object();
  j["elements"] = std::move(els);
  return j;
}

Povm povm_from_json(const Json& j) {
  const Json& els = field(j, "elements", "povm");
  if (!els.is_array() || els.empty()) throw ParseError("povm: elements must be a non-empty array");
  std::vector<Operator> elements;
  for (std::size_t e = 0; e < els.size(); ++e) {
    elements.push_back(matrix_from_json(els[e], "povm element " + std::to_string(e)));
  }
  return Povm(std::move(elements));
}

std::string to_document(const Json& j) { return j.dump(2) + "\n"; }

Json read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void write_document(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << to_document(j);
}

AttackModel parse_attack_file(const std::filesystem::path& path) {
  return attack_from_json(read_document(path));
}

void write_attack_file(const std::filesystem::path& path, const AttackModel& attack) {
  write_document(path, attack_to_json(attack));
}

Povm parse_povm_file(const std::filesystem::path& path) { return povm_from_json(read_document(path)); }

Json proof_trace_to_json(const ProofTrace& trace) {
  Json steps = Json::array();
  for (const ProofStep& s : trace.steps) {
    Json step = Json::object();
    step["name"] = s.name;
    step["relation"] = relation_name(s.relation);
    step["lhs"] = s.lhs;
    step["rhs"] = s.rhs;
    step["slack"] = s.slack();
    step["satisfied"] = s.satisfied();
    steps.push_back(std::move(step));
  }
  Json j = Json::object();
  j["lhs_overlap"] = trace.lhs_overlap;
  j["fidelity_sum"] = trace.fidelity_sum;
  j["p0"] = table_to_json(trace.p0.table());
  j["p0_marginal"] = Json::array({trace.p0_marginal[0], trace.p0_marginal[1]});
  j["steps"] = std::move(steps);
  j["min_inequality_slack"] = trace.min_inequality_slack();
  j["max_equality_error"] = trace.max_equality_error();
  j["holds"] = trace.holds();
  return j;
}

Json tradeoff_report_to_json(const TradeoffReport& report) {
  Json j = Json::object();
  j["p_ctrl"] = report.p_ctrl;
  j["p_sift"] = report.p_sift;
  j["p_a"] = Json::array({report.p_a[0], report.p_a[1]});
  j["joint"] = table_to_json(report.joint.table());
  j["info"] = report.info;
  j["lemma1"] = report.lemma1;
  j["rhs"] = report.rhs;
  j["gap"] = report.gap;
  j["holds"] = report.holds;
  j["proof_chain"] = proof_trace_to_json(report.trace);
  return j;
}

void validate_report(const Json& report) {
  const std::string what = "report";
  const Json& body = report.contains("tradeoff") ? report.at("tradeoff") : report;
  const double p_ctrl = number_field(body, "p_ctrl", what);
  const double p_sift = number_field(body, "p_sift", what);
  require_probability(p_ctrl, "p_ctrl");
  require_probability(p_sift, "p_sift");
  const double info = number_field(body, "info", what);
  const double rhs = number_field(body, "rhs", what);
  const double gap = number_field(body, "gap", what);
  const double lemma1 = number_field(body, "lemma1", what);
  if (info < 0.0 || lemma1 < 0.0) throw ParseError("report: negative information");
  require_close(rhs, theorem_rhs(p_ctrl, p_sift), "rhs");
  require_close(gap, rhs - info, "gap");
  if (bool_field(body, "holds", what) != (gap >= -tol::kSlack)) {
    throw ParseError("report: holds disagrees with gap");
  }

  const Json& joint = field(body, "joint", what);
  if (!joint.is_array() || joint.size() != 2) throw ParseError("report: joint must have two rows");
  Eigen::MatrixXd table(2, static_cast<Eigen::Index>(joint[0].size()));
  for (std::size_t z = 0; z < 2; ++z) {
    if (!joint[z].is_array() || joint[z].size() != joint[0].size()) {
      throw ParseError("report: joint rows differ in length");
    }
    for (std::size_t e = 0; e < joint[z].size(); ++e) {
      if (!joint[z][e].is_number()) throw ParseError("report: joint entries must be numbers");
      table(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(e)) = joint[z][e].get<double>();
    }
  }
  try {
    require_close(info, mutual_information(JointDistribution::from_table(table)), "info");
  } catch (const DomainError& e) {
    throw ParseError(std::string("report: invalid joint distribution: ") + e.what());
  }

  const Json& chain = field(body, "proof_chain", what);
  const Json& steps = field(chain, "steps", "proof_chain");
  if (!steps.is_array() || steps.empty()) throw ParseError("report: proof_chain.steps is empty");
  bool all = true;
  for (const Json& s : steps) {
    const Json& rel = field(s, "relation", "step");
    if (!rel.is_string() || (rel != "<=" && rel != "=")) {
      throw ParseError("report: step relation must be '<=' or '='");
    }
    const ProofStep step{field(s, "name", "step").get<std::string>(), number_field(s, "lhs", "step"),
                         number_field(s, "rhs", "step"),
                         rel == "=" ? ProofStep::Relation::kEqual : ProofStep::Relation::kLessEqual};
    require_close(number_field(s, "slack", "step"), step.slack(), "slack of " + step.name);
    if (bool_field(s, "satisfied", "step") != step.satisfied()) {
      throw ParseError("report: step " + step.name + " has inconsistent satisfied flag");
    }
    all = all && step.satisfied();
  }
  if (bool_field(chain, "holds", "proof_chain") != all) {
    throw ParseError("report: proof_chain.holds disagrees with its steps");
  }

  try {
    if (report.contains("attack")) {
      const AttackModel a = attack_from_json(report.at("attack"));
      if (report.contains("povm")) {
        const Povm p = povm_from_json(report.at("povm"));
        if (p.dim() != a.ancilla_dim) throw ParseError("report: POVM and attack dimensions differ");
      }
    }
  } catch (const ValidationError& e) {
    throw ParseError(std::string("report: ") + e.what());
  } catch (const DimensionError& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace sqkd
