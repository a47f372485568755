// Copyright 2026 The coset-qrc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coset_qrc/pauli.hpp"

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"

using coset_qrc::PauliString;

namespace {

const char kLetters[] = {'I', 'X', 'Y', 'Z'};
const char* kPrefixes[] = {"+", "+i", "-", "-i"};

std::vector<std::string> all_pauli_texts(int n) {
  std::vector<std::string> texts;
  const int combos = 1 << (2 * n);
  for (int prefix = 0; prefix < 4; ++prefix) {
    for (int c = 0; c < combos; ++c) {
      std::string t = kPrefixes[prefix];
      int rest = c;
      for (int q = 0; q < n; ++q) {
        t += kLetters[rest & 3];
        rest >>= 2;
      }
      texts.push_back(t);
    }
  }
  return texts;
}

std::string random_pauli_text(int n, std::mt19937_64& rng) {
  std::string t = kPrefixes[rng() & 3];
  for (int q = 0; q < n; ++q) {
    t += kLetters[rng() & 3];
  }
  return t;
}

double max_abs_diff(const oracles::Mat& a, const oracles::Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("matrices of single letters match the literal definitions") {
  CHECK(max_abs_diff(PauliString::parse("I").to_matrix(), oracles::pauli_letter('I')) == 0.0);
  CHECK(max_abs_diff(PauliString::parse("X").to_matrix(), oracles::pauli_letter('X')) == 0.0);
  CHECK(max_abs_diff(PauliString::parse("Y").to_matrix(), oracles::pauli_letter('Y')) == 0.0);
  CHECK(max_abs_diff(PauliString::parse("Z").to_matrix(), oracles::pauli_letter('Z')) == 0.0);
}

TEST_CASE("ZZ is the parity operator with qubit 1 as the most significant bit") {
  const auto m = PauliString::parse("ZZ").to_matrix();
  CHECK(m(0, 0) == oracles::Complex{1, 0});
  CHECK(m(1, 1) == oracles::Complex{-1, 0});
  CHECK(m(2, 2) == oracles::Complex{-1, 0});
  CHECK(m(3, 3) == oracles::Complex{1, 0});
  const auto zi = PauliString::parse("ZI").to_matrix();
  CHECK(zi(1, 1) == oracles::Complex{1, 0});   // |01>: qubit 1 is 0
  CHECK(zi(2, 2) == oracles::Complex{-1, 0});  // |10>: qubit 1 is 1
}

TEST_CASE("product and commutation agree with dense matrices for all 1- and 2-qubit pairs") {
  for (int n = 1; n <= 2; ++n) {
    const auto texts = all_pauli_texts(n);
    std::vector<PauliString> paulis;
    std::vector<oracles::Mat> matrices;
    for (const auto& t : texts) {
      paulis.push_back(PauliString::parse(t));
      matrices.push_back(oracles::pauli_text_matrix(t));
    }
    for (std::size_t i = 0; i < paulis.size(); ++i) {
      REQUIRE(max_abs_diff(paulis[i].to_matrix(), matrices[i]) < 1e-15);
      for (std::size_t j = 0; j < paulis.size(); ++j) {
        const PauliString prod = paulis[i] * paulis[j];
        REQUIRE(max_abs_diff(prod.to_matrix(), matrices[i] * matrices[j]) < 1e-15);
        const bool commute_matrix =
            max_abs_diff(matrices[i] * matrices[j], matrices[j] * matrices[i]) < 1e-12;
        REQUIRE(paulis[i].commutes_with(paulis[j]) == commute_matrix);
      }
    }
  }
}

TEST_CASE("product and commutation agree with dense matrices on random 3-qubit pairs") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string ta = random_pauli_text(3, rng);
    const std::string tb = random_pauli_text(3, rng);
    const PauliString a = PauliString::parse(ta);
    const PauliString b = PauliString::parse(tb);
    const oracles::Mat ma = oracles::pauli_text_matrix(ta);
    const oracles::Mat mb = oracles::pauli_text_matrix(tb);
    REQUIRE(max_abs_diff((a * b).to_matrix(), ma * mb) < 1e-15);
    const bool commute_matrix = max_abs_diff(ma * mb, mb * ma) < 1e-12;
    REQUIRE(a.commutes_with(b) == commute_matrix);
  }
}

TEST_CASE("parse and to_string round-trip every 1- and 2-qubit Pauli") {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& t : all_pauli_texts(n)) {
      CHECK(PauliString::parse(t).to_string() == t);
    }
  }
  CHECK(PauliString::parse("-iXYZ").to_string() == "-iXYZ");
  CHECK(PauliString::parse("ZZI").to_string() == "+ZZI");
  CHECK(PauliString::parse("iX").to_string() == "+iX");
}

TEST_CASE("single-qubit algebra tracks phases") {
  const auto x = PauliString::parse("X");
  const auto z = PauliString::parse("Z");
  CHECK((x * z).to_string() == "-iY");
  CHECK((z * x).to_string() == "+iY");
  CHECK((x * x).is_identity());
  const auto y = PauliString::parse("Y");
  CHECK((x * y * z).to_string() == "+iI");
}

TEST_CASE("factory helpers place letters at 1-based positions") {
  CHECK(PauliString::single(3, 2, 'Y').to_string() == "+IYI");
  CHECK(PauliString::single(3, 1, 'X').to_string() == "+XII");
  CHECK(PauliString::single(3, 3, 'Z').to_string() == "+IIZ");
  CHECK(PauliString::identity(4).to_string() == "+IIII");
  CHECK(PauliString::identity(4).is_identity());
  CHECK_THROWS_AS(PauliString::single(3, 0, 'X'), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::single(3, 4, 'X'), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::single(3, 1, 'Q'), std::invalid_argument);
}

TEST_CASE("hermiticity follows the displayed phase") {
  CHECK(PauliString::parse("+XX").is_hermitian());
  CHECK(PauliString::parse("-Z").is_hermitian());
  CHECK(PauliString::parse("+Y").is_hermitian());
  CHECK_FALSE(PauliString::parse("+iX").is_hermitian());
  CHECK_FALSE(PauliString::parse("-iZZ").is_hermitian());
}

TEST_CASE("commutation matches the stabilizer textbook cases") {
  const auto x1 = PauliString::parse("XII");
  const auto x2 = PauliString::parse("IXI");
  const auto z1z2 = PauliString::parse("ZZI");
  const auto z2z3 = PauliString::parse("IZZ");
  CHECK_FALSE(x1.commutes_with(z1z2));
  CHECK_FALSE(x2.commutes_with(z1z2));
  CHECK_FALSE(x2.commutes_with(z2z3));
  CHECK(z1z2.commutes_with(z2z3));
  CHECK(PauliString::parse("XXI").commutes_with(z1z2));
}

TEST_CASE("malformed text and mismatched operands are rejected") {
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+iQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("XA"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X") * PauliString::parse("XX"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X").commutes_with(PauliString::parse("XX")),
                  std::invalid_argument);
  CHECK_THROWS_AS(PauliString::from_bits({1, 0}, {1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::from_bits({1}, {1}, 4), std::invalid_argument);
}

TEST_CASE("dense conversion refuses oversized operators") {
  CHECK_THROWS_AS(PauliString::identity(coset_qrc::kDenseQubitLimit + 1).to_matrix(),
                  std::invalid_argument);
}

TEST_CASE("(Z1Z2)(Z2Z3) = Z1Z3 with a plus sign") {
  const auto prod = PauliString::parse("ZZI") * PauliString::parse("IZZ");
  CHECK(prod.to_string() == "+ZIZ");
  CHECK(max_abs_diff(prod.to_matrix(),
                     oracles::pauli_text_matrix("ZZI") * oracles::pauli_text_matrix("IZZ")) <
        1e-15);
}
