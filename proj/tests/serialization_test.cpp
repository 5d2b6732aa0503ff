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

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "fixtures.hpp"
#include "sqkd/attacks.hpp"
#include "sqkd/experiments.hpp"

namespace sqkd {
namespace {

namespace fs = std::filesystem;

bool bit_identical(const Operator& a, const Operator& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(Operator::Scalar) * a.size()) == 0;
}

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("sqkd_serialization_" + name);
}

TEST(AttackJsonTest, IdentityDocument) {
  const Json doc = Json::parse(R"({
    "ancilla_dim": 2,
    "omega": [[1, 0], [0, 0]],
    "V": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]],
          [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]],
    "U": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[1,0],[0,0],[0,0]],
          [[0,0],[0,0],[1,0],[0,0]], [[0,0],[0,0],[0,0],[1,0]]]
  })");
  const AttackModel a = attack_from_json(doc);
  EXPECT_EQ(a.ancilla_dim, 2);
  EXPECT_EQ(a.v, Operator::Identity(4, 4));
  EXPECT_EQ(a.u, Operator::Identity(4, 4));
  EXPECT_EQ(ctrl_error(a), 0.0);
  EXPECT_EQ(sift_branch(a).p_sift, 0.0);
}

TEST(AttackJsonTest, NonUnitaryCitesDeviation) {
  Json doc = attack_to_json(identity_attack());
  doc["V"][0][1] = Json::array({0.1, 0.0});
  try {
    attack_from_json(doc);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("V"), std::string::npos) << msg;
    EXPECT_NE(msg.find("0.1"), std::string::npos) << msg;
  }
}

TEST(AttackJsonTest, MalformedDocuments) {
  Json doc = attack_to_json(identity_attack());
  doc.erase("U");
  EXPECT_THROW(attack_from_json(doc), ParseError);

  doc = attack_to_json(identity_attack());
  doc["ancilla_dim"] = -1;
  EXPECT_THROW(attack_from_json(doc), ParseError);

  doc = attack_to_json(identity_attack());
  doc["V"][2] = Json::array({Json::array({1, 0})});
  EXPECT_THROW(attack_from_json(doc), ParseError);

  doc = attack_to_json(identity_attack());
  doc["ancilla_dim"] = 3;
  EXPECT_THROW(attack_from_json(doc), DimensionError);

  doc = attack_to_json(identity_attack());
  doc["omega"] = Json::array({Json::array({1, 0}), Json::array({1, 0})});
  EXPECT_THROW(attack_from_json(doc), ValidationError);
}

TEST(AttackJsonTest, RandomRoundTripIsBitIdentical) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const AttackModel a = random_attack(1 + seed % kMaxRandomAncillaDim, seed);
    const AttackModel b = attack_from_json(Json::parse(to_document(attack_to_json(a))));
    ASSERT_EQ(a.ancilla_dim, b.ancilla_dim);
    ASSERT_TRUE(bit_identical(a.v, b.v)) << seed;
    ASSERT_TRUE(bit_identical(a.u, b.u)) << seed;
    ASSERT_TRUE(bit_identical(a.omega, b.omega)) << seed;
  }
}

TEST(AttackJsonTest, FileRoundTrip) {
  const fs::path path = scratch("attack.json");
  const AttackModel a = random_attack(3, std::uint64_t{99});
  write_attack_file(path, a);
  const AttackModel b = parse_attack_file(path);
  EXPECT_TRUE(bit_identical(a.u, b.u));
  fs::remove(path);
  EXPECT_THROW(parse_attack_file(path), ParseError);
}

TEST(PovmJsonTest, RoundTrip) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Povm p = random_povm(3, 5, rng);
    const Povm q = povm_from_json(Json::parse(to_document(povm_to_json(p))));
    ASSERT_EQ(p.outcome_count(), q.outcome_count());
    for (std::size_t e = 0; e < p.outcome_count(); ++e) {
      ASSERT_TRUE(bit_identical(p[e], q[e]));
    }
  }
}

TEST(PovmJsonTest, RejectsIncompleteSet) {
  Json doc = povm_to_json(computational_basis_povm(2));
  doc["elements"].erase(1);
  EXPECT_THROW(povm_from_json(doc), ValidationError);
  EXPECT_THROW(povm_from_json(Json::object()), ParseError);
}

TEST(ReadDocumentTest, MalformedJson) {
  const fs::path path = scratch("broken.json");
  std::ofstream(path) << "{\"ancilla_dim\": 2,";
  EXPECT_THROW(read_document(path), ParseError);
  fs::remove(path);
}

TEST(ReportJsonTest, ValidatesGeneratedReports) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const AttackInstance inst = random_attack_instance(rng);
    const Json j = tradeoff_report_to_json(verify_tradeoff(inst.attack, inst.povm));
    ASSERT_NO_THROW(validate_report(Json::parse(to_document(j))));
  }
}

TEST(ReportJsonTest, DetectsTampering) {
  const Json good = tradeoff_report_to_json(
      verify_tradeoff(forward_cnot_attack(), computational_basis_povm(2)));
  EXPECT_NO_THROW(validate_report(good));

  Json bad = good;
  bad["rhs"] = 0.5;
  EXPECT_THROW(validate_report(bad), ParseError);

  bad = good;
  bad["holds"] = false;
  EXPECT_THROW(validate_report(bad), ParseError);

  bad = good;
  bad["info"] = 0.25;
  EXPECT_THROW(validate_report(bad), ParseError);

  bad = good;
  bad["proof_chain"]["steps"][0]["lhs"] = 7.0;
  EXPECT_THROW(validate_report(bad), ParseError);

  bad = good;
  bad.erase("gap");
  EXPECT_THROW(validate_report(bad), ParseError);

  Json wrapped = Json::object();
  wrapped["tradeoff"] = good;
  EXPECT_NO_THROW(validate_report(wrapped));
}

}  // namespace
}  // namespace sqkd
