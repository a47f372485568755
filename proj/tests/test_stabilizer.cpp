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

#include "coset_qrc/stabilizer.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "coset_qrc/pauli.hpp"
#include "oracles.hpp"

using coset_qrc::mask_from_signs;
using coset_qrc::PauliString;
using coset_qrc::signs_from_mask;
using coset_qrc::StabilizerErrorKind;
using coset_qrc::StabilizerSpec;
using coset_qrc::StabilizerValidationError;
using coset_qrc::SyndromeMask;

namespace {

std::vector<PauliString> parse_all(const std::vector<std::string>& texts) {
  std::vector<PauliString> out;
  for (const auto& t : texts) {
    out.push_back(PauliString::parse(t));
  }
  return out;
}

StabilizerErrorKind kind_of(const std::vector<std::string>& texts) {
  try {
    StabilizerSpec spec(parse_all(texts));
  } catch (const StabilizerValidationError& e) {
    return e.kind();
  }
  FAIL("expected a validation error");
  return StabilizerErrorKind::kEmpty;
}

double max_abs_diff(const oracles::Mat& a, const oracles::Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("preset generator layouts") {
  StabilizerSpec single = StabilizerSpec::single_z(3, 2);
  REQUIRE(single.num_qubits() == 3);
  REQUIRE(single.num_generators() == 2);
  CHECK(single.generators()[0].to_string() == "+ZII");
  CHECK(single.generators()[1].to_string() == "+IZI");
  CHECK(single.num_syndromes() == 4);
  CHECK(single.is_z_type());

  StabilizerSpec chain = StabilizerSpec::chain_zz(4, 3);
  REQUIRE(chain.num_generators() == 3);
  CHECK(chain.generators()[0].to_string() == "+ZZII");
  CHECK(chain.generators()[1].to_string() == "+IZZI");
  CHECK(chain.generators()[2].to_string() == "+IIZZ");
  CHECK(chain.num_syndromes() == 8);
  CHECK(chain.is_z_type());

  CHECK_THROWS_AS(StabilizerSpec::single_z(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(StabilizerSpec::single_z(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(StabilizerSpec::chain_zz(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(StabilizerSpec::chain_zz(1, 1), std::invalid_argument);
}

TEST_CASE("validation rejects malformed generator sets") {
  CHECK(kind_of({}) == StabilizerErrorKind::kEmpty);
  CHECK(kind_of({"ZZ", "ZZZ"}) == StabilizerErrorKind::kSizeMismatch);
  CHECK(kind_of({"-Z"}) == StabilizerErrorKind::kMinusIdentity);
  CHECK(kind_of({"iZ"}) == StabilizerErrorKind::kMinusIdentity);
  CHECK(kind_of({"Z", "X"}) == StabilizerErrorKind::kNotCommuting);
  CHECK(kind_of({"ZZ", "ZZ"}) == StabilizerErrorKind::kDependent);
  // The product of the first two equals the third.
  CHECK(kind_of({"ZZI", "IZZ", "ZIZ"}) == StabilizerErrorKind::kDependent);
  // Identity carries no constraint, so it is dependent on the empty set.
  CHECK(kind_of({"II", "ZZ"}) == StabilizerErrorKind::kDependent);
}

TEST_CASE("validation reports offender indices") {
  try {
    StabilizerSpec spec(parse_all({"ZZI", "IXI", "IZZ"}));
    FAIL("expected a validation error");
  } catch (const StabilizerValidationError& e) {
    CHECK(e.kind() == StabilizerErrorKind::kNotCommuting);
    CHECK(e.index_a() == 0);
    CHECK(e.index_b() == 1);
  }
  try {
    StabilizerSpec spec(parse_all({"ZZI", "IZZ", "ZIZ"}));
    FAIL("expected a validation error");
  } catch (const StabilizerValidationError& e) {
    CHECK(e.kind() == StabilizerErrorKind::kDependent);
    CHECK(e.index_a() == 2);
  }
}

TEST_CASE("destabilizers for documented examples") {
  StabilizerSpec chain3(parse_all({"ZZI", "IZZ"}));
  REQUIRE(chain3.destabilizers().size() == 2);
  CHECK(chain3.destabilizers()[0].to_string() == "+XII");
  CHECK(chain3.destabilizers()[1].to_string() == "+XXI");

  StabilizerSpec single = StabilizerSpec::single_z(3, 2);
  CHECK(single.destabilizers()[0].to_string() == "+XII");
  CHECK(single.destabilizers()[1].to_string() == "+IXI");

  StabilizerSpec chain4 = StabilizerSpec::chain_zz(4, 3);
  CHECK(chain4.destabilizers()[0].to_string() == "+XIII");
  CHECK(chain4.destabilizers()[1].to_string() == "+XXII");
  CHECK(chain4.destabilizers()[2].to_string() == "+XXXI");

  // A non-Z-type group still gets a valid destabilizer frame.
  StabilizerSpec xpair(parse_all({"XX"}));
  CHECK(xpair.destabilizers()[0].to_string() == "+ZI");
}

TEST_CASE("destabilizer frame invariants") {
  std::vector<StabilizerSpec> specs;
  specs.push_back(StabilizerSpec::chain_zz(4, 3));
  specs.push_back(StabilizerSpec::single_z(3, 2));
  specs.push_back(StabilizerSpec::chain_zz(5, 2));
  specs.push_back(StabilizerSpec(parse_all({"XX"})));
  specs.push_back(StabilizerSpec(parse_all({"XXI", "IXX"})));
  specs.push_back(StabilizerSpec(parse_all({"ZZI", "XXX"})));

  for (const auto& spec : specs) {
    const auto& gens = spec.generators();
    const auto& dest = spec.destabilizers();
    REQUIRE(dest.size() == gens.size());
    for (std::size_t i = 0; i < dest.size(); ++i) {
      CHECK(dest[i].display_phase() == 0);
      CHECK(dest[i].is_hermitian());
      CHECK((dest[i] * dest[i]).is_identity());
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const bool expect_commute = (i != j);
        CHECK(dest[i].commutes_with(gens[j]) == expect_commute);
      }
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(dest[i].commutes_with(dest[j]));
      }
    }
  }
}

TEST_CASE("syndrome masks convert to and from sign vectors") {
  CHECK(mask_from_signs({+1, +1, +1}) == 0u);
  CHECK(mask_from_signs({-1, +1, +1}) == 1u);
  CHECK(mask_from_signs({+1, -1, +1}) == 2u);
  CHECK(mask_from_signs({-1, -1, -1}) == 7u);
  for (SyndromeMask m = 0; m < 8; ++m) {
    CHECK(mask_from_signs(signs_from_mask(m, 3)) == m);
  }
  CHECK(signs_from_mask(5, 3) == std::vector<int>{-1, +1, -1});
  CHECK_THROWS_AS(mask_from_signs({0, 1}), std::invalid_argument);
}

TEST_CASE("generator products select subsets by mask") {
  StabilizerSpec chain = StabilizerSpec::chain_zz(4, 3);
  CHECK(chain.generator_product(0).is_identity());
  CHECK(chain.generator_product(1).to_string() == "+ZZII");
  CHECK(chain.generator_product(3).to_string() == "+ZIZI");
  CHECK(chain.generator_product(5).to_string() == "+ZZZZ");
  CHECK(chain.generator_product(7).to_string() == "+ZIIZ");
}

TEST_CASE("corrections move cosets back to the code space") {
  StabilizerSpec chain3(parse_all({"ZZI", "IZZ"}));
  CHECK(chain3.correction(0).is_identity());
  CHECK(chain3.correction(1).to_string() == "+XII");
  CHECK(chain3.correction(2).to_string() == "+XXI");
  CHECK(chain3.correction(3).to_string() == "+IXI");
  CHECK(chain3.correction(std::vector<int>{-1, +1}).to_string() == "+XII");

  for (SyndromeMask a = 0; a < chain3.num_syndromes(); ++a) {
    PauliString q = chain3.correction(a);
    CHECK(q.is_hermitian());
    CHECK((q * q).is_identity());
    // Conjugating each generator by the correction restores the sign
    // pattern of the target coset: q anticommutes with s_j exactly when
    // bit j of the mask is set.
    for (std::size_t j = 0; j < chain3.generators().size(); ++j) {
      const bool flip = ((a >> j) & 1u) != 0u;
      CHECK(q.commutes_with(chain3.generators()[j]) == !flip);
    }
  }
}

TEST_CASE("coset projectors partition the Hilbert space") {
  std::vector<StabilizerSpec> specs;
  specs.push_back(StabilizerSpec(parse_all({"ZZI", "IZZ"})));
  specs.push_back(StabilizerSpec::single_z(3, 2));
  specs.push_back(StabilizerSpec(parse_all({"XX"})));
  specs.push_back(StabilizerSpec::chain_zz(4, 3));

  for (const auto& spec : specs) {
    const int dim = 1 << spec.num_qubits();
    oracles::Mat total = oracles::Mat::Zero(dim, dim);
    for (SyndromeMask a = 0; a < spec.num_syndromes(); ++a) {
      oracles::Mat proj = spec.coset_projector(a);
      CHECK(max_abs_diff(proj, proj.adjoint()) < 1e-12);
      CHECK(max_abs_diff(proj * proj, proj) < 1e-12);
      // Each generator acts on its coset with the labelled sign.
      for (std::size_t j = 0; j < spec.generators().size(); ++j) {
        oracles::Mat s =
            oracles::pauli_text_matrix(spec.generators()[j].to_string());
        const double sign = ((a >> j) & 1u) ? -1.0 : 1.0;
        CHECK(max_abs_diff(s * proj, sign * proj) < 1e-12);
      }
      total += proj;
    }
    CHECK(max_abs_diff(total, oracles::Mat::Identity(dim, dim)) < 1e-12);
  }
}

TEST_CASE("code space projector of the three qubit chain") {
  StabilizerSpec chain3(parse_all({"ZZI", "IZZ"}));
  oracles::Mat proj = chain3.coset_projector(0);
  oracles::Mat expected = oracles::Mat::Zero(8, 8);
  expected(0, 0) = 1.0;
  expected(7, 7) = 1.0;
  CHECK(max_abs_diff(proj, expected) < 1e-12);
}

TEST_CASE("corrected projectors land inside the code space") {
  std::vector<StabilizerSpec> specs;
  specs.push_back(StabilizerSpec::chain_zz(4, 3));
  specs.push_back(StabilizerSpec::single_z(3, 2));
  specs.push_back(StabilizerSpec(parse_all({"XX"})));

  for (const auto& spec : specs) {
    for (SyndromeMask a = 0; a < spec.num_syndromes(); ++a) {
      oracles::Mat op =
          spec.correction(a).to_matrix() * spec.coset_projector(a);
      for (const auto& g : spec.generators()) {
        oracles::Mat s = oracles::pauli_text_matrix(g.to_string());
        CHECK(max_abs_diff(s * op, op) < 1e-12);
      }
    }
  }
}

TEST_CASE("coset enumeration lists computational basis states") {
  StabilizerSpec chain3(parse_all({"ZZI", "IZZ"}));
  auto cosets = chain3.enumerate_cosets();
  REQUIRE(cosets.size() == 4);
  std::set<std::uint64_t> seen;
  for (const auto& coset : cosets) {
    REQUIRE(coset.basis_states.size() == 2);
    for (std::uint64_t b : coset.basis_states) {
      CHECK(seen.insert(b).second);
    }
  }
  CHECK(seen.size() == 8);
  CHECK(cosets[0].syndrome == 0u);
  CHECK(cosets[0].basis_states == std::vector<std::uint64_t>{0, 7});

  StabilizerSpec single = StabilizerSpec::single_z(3, 2);
  auto single_cosets = single.enumerate_cosets();
  // Qubit 1 is the most significant bit, so the code space holds
  // |000> and |001>, and flipping qubit 1 lands on |100>, |101>.
  CHECK(single_cosets[0].basis_states == std::vector<std::uint64_t>{0, 1});
  CHECK(single_cosets[1].basis_states == std::vector<std::uint64_t>{4, 5});

  // Enumerated labels agree with the projector diagonal.
  for (const auto& coset : cosets) {
    oracles::Mat proj = chain3.coset_projector(coset.syndrome);
    for (std::uint64_t b : coset.basis_states) {
      const auto idx = static_cast<Eigen::Index>(b);
      CHECK(std::abs(proj(idx, idx).real() - 1.0) < 1e-12);
    }
  }

  StabilizerSpec xpair(parse_all({"XX"}));
  CHECK_THROWS_AS(xpair.enumerate_cosets(), std::logic_error);
}
