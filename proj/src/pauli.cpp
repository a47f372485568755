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

#include <complex>
#include <stdexcept>

namespace coset_qrc {

namespace {

using Complex = std::complex<double>;

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Eigen::Matrix2cd site_factor(bool x, bool z) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  if (!x && !z) {
    m << 1, 0, 0, 1;
  } else if (x && !z) {
    m << 0, 1, 1, 0;
  } else if (!x && z) {
    m << 1, 0, 0, -1;
  } else {
    // X*Z, i.e. -iY.
    m << 0, -1, 1, 0;
  }
  return m;
}

int count_y(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& z) {
  int c = 0;
  for (std::size_t q = 0; q < x.size(); ++q) {
    c += (x[q] & z[q]) ? 1 : 0;
  }
  return c;
}

}  // namespace

PauliString PauliString::identity(int num_qubits) {
  if (num_qubits < 0) {
    throw std::invalid_argument("PauliString: negative qubit count");
  }
  PauliString p;
  p.x_.assign(static_cast<std::size_t>(num_qubits), 0);
  p.z_.assign(static_cast<std::size_t>(num_qubits), 0);
  return p;
}

PauliString PauliString::single(int num_qubits, int qubit, char letter) {
  if (qubit < 1 || qubit > num_qubits) {
    throw std::invalid_argument("PauliString: qubit index out of range");
  }
  PauliString p = identity(num_qubits);
  const std::size_t q = static_cast<std::size_t>(qubit - 1);
  switch (letter) {
    case 'X':
      p.x_[q] = 1;
      break;
    case 'Z':
      p.z_[q] = 1;
      break;
    case 'Y':
      p.x_[q] = 1;
      p.z_[q] = 1;
      p.phase_ = 1;  // Y = i * XZ
      break;
    default:
      throw std::invalid_argument("PauliString: letter must be X, Y or Z");
  }
  return p;
}

PauliString PauliString::from_bits(std::vector<std::uint8_t> x_bits, std::vector<std::uint8_t> z_bits,
                                   int phase_power) {
  if (x_bits.size() != z_bits.size()) {
    throw std::invalid_argument("PauliString: x/z bit vectors differ in length");
  }
  if (phase_power < 0 || phase_power > 3) {
    throw std::invalid_argument("PauliString: phase must be in {0,1,2,3}");
  }
  PauliString p;
  for (auto& b : x_bits) b = b ? 1 : 0;
  for (auto& b : z_bits) b = b ? 1 : 0;
  p.x_ = std::move(x_bits);
  p.z_ = std::move(z_bits);
  p.phase_ = phase_power;
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  std::size_t pos = 0;
  int display = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    display = (text[pos] == '-') ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    display += 1;
    ++pos;
  }
  if (pos >= text.size()) {
    throw std::invalid_argument("PauliString: empty letter string in '" + std::string(text) + "'");
  }
  PauliString p;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I':
        p.x_.push_back(0);
        p.z_.push_back(0);
        break;
      case 'X':
        p.x_.push_back(1);
        p.z_.push_back(0);
        break;
      case 'Y':
        p.x_.push_back(1);
        p.z_.push_back(1);
        break;
      case 'Z':
        p.x_.push_back(0);
        p.z_.push_back(1);
        break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" + std::string(1, text[pos]) +
                                    "' in '" + std::string(text) + "'");
    }
  }
  p.phase_ = (display + count_y(p.x_, p.z_)) & 3;
  return p;
}

int PauliString::display_phase() const {
  return ((phase_ - count_y(x_, z_)) % 4 + 4) % 4;
}

bool PauliString::is_identity() const {
  if (phase_ != 0) return false;
  for (std::size_t q = 0; q < x_.size(); ++q) {
    if (x_[q] || z_[q]) return false;
  }
  return true;
}

bool PauliString::is_hermitian() const {
  // P^dag = i^(-phase + 2*nY) over the same bits, so P is Hermitian exactly
  // when phase == nY (mod 2), i.e. the printed prefix is +1 or -1.
  return (display_phase() & 1) == 0;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (num_qubits() != other.num_qubits()) {
    throw std::invalid_argument("PauliString: qubit count mismatch");
  }
  int acc = 0;
  for (std::size_t q = 0; q < x_.size(); ++q) {
    acc ^= (x_[q] & other.z_[q]) ^ (z_[q] & other.x_[q]);
  }
  return acc == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (num_qubits() != other.num_qubits()) {
    throw std::invalid_argument("PauliString: qubit count mismatch");
  }
  PauliString out;
  const std::size_t n = x_.size();
  out.x_.resize(n);
  out.z_.resize(n);
  int crossings = 0;  // Z factors of the left operand moving past X factors of the right.
  for (std::size_t q = 0; q < n; ++q) {
    out.x_[q] = x_[q] ^ other.x_[q];
    out.z_[q] = z_[q] ^ other.z_[q];
    crossings += z_[q] & other.x_[q];
  }
  out.phase_ = (phase_ + other.phase_ + 2 * crossings) & 3;
  return out;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[display_phase()];
  for (std::size_t q = 0; q < x_.size(); ++q) {
    if (x_[q] && z_[q]) {
      s += 'Y';
    } else if (x_[q]) {
      s += 'X';
    } else if (z_[q]) {
      s += 'Z';
    } else {
      s += 'I';
    }
  }
  return s;
}

Eigen::MatrixXcd PauliString::to_matrix() const {
  const int n = num_qubits();
  if (n > kDenseQubitLimit) {
    throw std::invalid_argument("PauliString: qubit count above dense limit");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(1, 1, kPhases[phase_ & 3]);
  for (int q = 0; q < n; ++q) {
    const Eigen::Matrix2cd f = site_factor(x_[static_cast<std::size_t>(q)] != 0,
                                           z_[static_cast<std::size_t>(q)] != 0);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
      }
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace coset_qrc
