// Copyright 2026 The sizecon Authors
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

#pragma once

// Dense-matrix reference for Pauli strings and gates, built from explicit
// 2x2 / 4x4 matrices and Kronecker products (qubit 0 is the leftmost factor).
// Deliberately independent of the bit-twiddling kernels in the library.

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "sizecon/circuit.hpp"

namespace sizecon::oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat pauli_matrix(char c) {
  Mat m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron_string(const std::string& s) {
  Mat m = pauli_matrix(s[0]);
  for (std::size_t k = 1; k < s.size(); ++k) m = Eigen::kroneckerProduct(m, pauli_matrix(s[k])).eval();
  return m;
}

inline Mat single_gate_matrix(const Gate& g) {
  Mat m(2, 2);
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  switch (g.kind) {
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2); break;
    default: throw std::logic_error("not a one-qubit gate");
  }
  return m;
}

/// Full-register unitary of one gate (two-qubit gates via projector sums).
inline Mat gate_unitary(const Gate& g, std::size_t width) {
  auto embed1 = [&](std::size_t q, const Mat& u) {
    Mat m = Mat::Identity(1, 1);
    for (std::size_t k = 0; k < width; ++k)
      m = Eigen::kroneckerProduct(m, k == q ? u : Mat(Mat::Identity(2, 2))).eval();
    return m;
  };
  Mat p0(2, 2), p1(2, 2);
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  switch (g.kind) {
    case GateKind::CNOT: {
      Mat a = Mat::Identity(1, 1), b = Mat::Identity(1, 1);
      for (std::size_t k = 0; k < width; ++k) {
        const Mat id = Mat::Identity(2, 2);
        a = Eigen::kroneckerProduct(a, k == g.targets[0] ? p0 : id).eval();
        b = Eigen::kroneckerProduct(b, k == g.targets[0] ? p1 : (k == g.targets[1] ? pauli_matrix('X') : id)).eval();
      }
      return a + b;
    }
    case GateKind::CZ: {
      Mat a = Mat::Identity(1, 1), b = Mat::Identity(1, 1);
      for (std::size_t k = 0; k < width; ++k) {
        const Mat id = Mat::Identity(2, 2);
        a = Eigen::kroneckerProduct(a, k == g.targets[0] ? p0 : id).eval();
        b = Eigen::kroneckerProduct(b, k == g.targets[0] ? p1 : (k == g.targets[1] ? pauli_matrix('Z') : id)).eval();
      }
      return a + b;
    }
    default: return embed1(g.targets[0], single_gate_matrix(g));
  }
}

inline Mat circuit_unitary(const Circuit& c) {
  const auto dim = Eigen::Index{1} << c.width();
  Mat u = Mat::Identity(dim, dim);
  for (const auto& g : c.gates()) u = (gate_unitary(g, c.width()) * u).eval();
  return u;
}

}  // namespace sizecon::oracle
