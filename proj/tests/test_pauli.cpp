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

#include <gtest/gtest.h>

#include <random>

#include "oracles/matrix_oracle.hpp"
#include "sizecon/dense.hpp"
#include "sizecon/h2_model.hpp"
#include "sizecon/pauli.hpp"

using namespace sizecon;

namespace {

std::vector<PauliString> all_strings(std::size_t width) {
  std::vector<PauliString> out;
  std::size_t count = std::size_t{1} << (2 * width);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Pauli> letters(width);
    for (std::size_t q = 0; q < width; ++q) letters[q] = static_cast<Pauli>((code >> (2 * q)) & 3);
    out.emplace_back(letters);
  }
  return out;
}

PauliString P(const char* s) { return PauliString::parse(s); }

}  // namespace

TEST(pauli_string, parse_and_print) {
  EXPECT_EQ(P("ZIZI").str(), "ZIZI");
  EXPECT_EQ(P("XYZ").width(), 3u);
  EXPECT_TRUE(P("III").is_identity());
  EXPECT_EQ(P("IXIZ").support(), (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(P(""), InvalidArgument);
  EXPECT_THROW(P("XQ"), InvalidArgument);
}

TEST(multiply, textbook_cases) {
  auto [ph, prod] = multiply(P("X"), P("Y"));
  EXPECT_EQ(ph, Phase::i());
  EXPECT_EQ(prod, P("Z"));

  auto [ph2, prod2] = multiply(P("III"), P("XYZ"));
  EXPECT_EQ(ph2, Phase::one());
  EXPECT_EQ(prod2, P("XYZ"));

  // XZ = -iY and ZX = iY, so the phases cancel.
  auto [ph3, prod3] = multiply(P("XZ"), P("ZX"));
  EXPECT_EQ(ph3, Phase::one());
  EXPECT_EQ(prod3, P("YY"));

  EXPECT_THROW(multiply(P("X"), P("XX")), InvalidArgument);
}

TEST(multiply, matches_matrix_oracle_up_to_width_3) {
  for (std::size_t w = 1; w <= 3; ++w) {
    const auto strings = all_strings(w);
    for (const auto& a : strings)
      for (const auto& b : strings) {
        auto [ph, prod] = multiply(a, b);
        const oracle::Mat lhs = oracle::kron_string(a.str()) * oracle::kron_string(b.str());
        const oracle::Mat rhs = ph.value() * oracle::kron_string(prod.str());
        ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-15) << a.str() << " * " << b.str();
      }
  }
}

TEST(multiply, associative_including_phase) {
  const auto strings = all_strings(2);
  for (const auto& a : strings)
    for (const auto& b : strings)
      for (const auto& c : strings) {
        auto [p1, ab] = multiply(a, b);
        auto [p2, ab_c] = multiply(ab, c);
        auto [p3, bc] = multiply(b, c);
        auto [p4, a_bc] = multiply(a, bc);
        ASSERT_EQ(ab_c, a_bc);
        ASSERT_EQ(p1 * p2, p3 * p4);
      }
}

TEST(commutes, examples) {
  EXPECT_TRUE(commutes(P("ZIZI"), P("ZZII")));
  EXPECT_FALSE(commutes(P("X"), P("Z")));
  EXPECT_TRUE(commutes(P("XI"), P("IZ")));
  EXPECT_TRUE(commutes(P("XX"), P("ZZ")));
  EXPECT_FALSE(qubitwise_commutes(P("XX"), P("ZZ")));
  EXPECT_THROW(commutes(P("X"), P("XX")), InvalidArgument);
}

TEST(commutes, matches_matrix_commutator_up_to_width_3) {
  for (std::size_t w = 1; w <= 3; ++w) {
    const auto strings = all_strings(w);
    for (const auto& a : strings) {
      const auto ma = oracle::kron_string(a.str());
      ASSERT_TRUE(commutes(PauliString::identity(w), a));
      for (const auto& b : strings) {
        const auto mb = oracle::kron_string(b.str());
        const bool matrix_commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-15;
        ASSERT_EQ(commutes(a, b), matrix_commute) << a.str() << ", " << b.str();
      }
    }
  }
}

TEST(dense, pauli_string_matrix_matches_kronecker_oracle) {
  for (std::size_t w = 1; w <= 3; ++w)
    for (const auto& p : all_strings(w))
      ASSERT_LT((to_dense(p) - oracle::kron_string(p.str())).cwiseAbs().maxCoeff(), 1e-15) << p.str();
}

TEST(dense, from_dense_recovers_pauli_sum) {
  PauliSum h(2);
  h.add(P("II"), -0.5);
  h.add(P("ZI"), 0.25);
  h.add(P("XY"), 0.125);
  h.add(P("YY"), -1.5);
  const PauliSum back = from_dense(to_dense(h));
  ASSERT_EQ(back.size(), h.size());
  for (const auto& [p, c] : h.terms()) EXPECT_NEAR(back.coefficient(p), c, 1e-15);
}

TEST(pauli_sum, merges_duplicates_and_checks_width) {
  PauliSum s(2);
  s.add(P("ZI"), 1.0);
  s.add(P("ZI"), 0.5);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_DOUBLE_EQ(s.coefficient(P("ZI")), 1.5);
  EXPECT_THROW(s.add(P("Z"), 1.0), InvalidArgument);
  s.add(P("XX"), 1e-16);
  s.simplify();
  EXPECT_EQ(s.size(), 1u);
}

TEST(pauli_sum, text_round_trip_random) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    PauliSum s(3);
    for (const auto& p : all_strings(3))
      if (rng() % 4 == 0) s.add(p, coeff(rng));
    if (s.empty()) continue;
    const PauliSum back = PauliSum::parse(s.str());
    ASSERT_EQ(back.terms(), s.terms());
  }
}

TEST(pauli_sum, parse_reports_line_numbers) {
  try {
    PauliSum::parse("1.0\tZI\n0.5 XX\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(PauliSum::parse("abc\tZ\n"), ParseError);
  EXPECT_THROW(PauliSum::parse("1\tZ\n1\tZZ\n"), ParseError);
}

TEST(embed, pads_with_identity) {
  PauliSum z(1);
  z.add(P("Z"), 0.3);
  const PauliSum e = embed(z, 0, 2);
  EXPECT_EQ(e.width(), 2u);
  EXPECT_DOUBLE_EQ(e.coefficient(P("ZI")), 0.3);
  EXPECT_EQ(embed(z, 1, 3).terms().begin()->first, P("IZI"));
  EXPECT_THROW(embed(z, 2, 2), InvalidArgument);

  const PauliSum c = embed(PauliSum::constant(2, -1.25), 1, 3);
  EXPECT_EQ(c.width(), 6u);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(c.identity_coefficient(), -1.25);
}

TEST(embed, spectrum_is_pairwise_sum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(-1, 1);
  for (std::size_t w = 1; w <= 2; ++w)
    for (int trial = 0; trial < 10; ++trial) {
      PauliSum h(w);
      for (const auto& p : all_strings(w)) h.add(p, coeff(rng));
      const auto sub = spectrum(h);
      std::vector<double> sums;
      for (Eigen::Index i = 0; i < sub.size(); ++i)
        for (Eigen::Index j = 0; j < sub.size(); ++j) sums.push_back(sub(i) + sub(j));
      std::sort(sums.begin(), sums.end());
      const auto total = spectrum(embed(h, 0, 2) + embed(h, 1, 2));
      ASSERT_EQ(static_cast<std::size_t>(total.size()), sums.size());
      for (std::size_t k = 0; k < sums.size(); ++k) ASSERT_NEAR(total(static_cast<Eigen::Index>(k)), sums[k], 1e-12);
    }
}

TEST(embed, h1q_pair_ground_is_twice_fci) {
  const auto m = build_h2_model(0.7414);
  const double e = ground_energy(embed(m.h1q, 0, 2) + embed(m.h1q, 1, 2));
  EXPECT_NEAR(e, 2 * m.e_fci, 1e-10);
}

TEST(qubitwise_groups, examples) {
  const std::vector<PauliString> zs = {P("ZIZI"), P("ZZII"), P("IIZZ")};
  EXPECT_EQ(qubitwise_groups(zs).size(), 1u);
  const std::vector<PauliString> xz = {P("Z"), P("X")};
  EXPECT_EQ(qubitwise_groups(xz).size(), 2u);
  EXPECT_TRUE(qubitwise_groups(std::vector<PauliString>{}).empty());
}

TEST(qubitwise_groups, random_partitions_are_valid) {
  std::mt19937_64 rng(3);
  const auto strings = all_strings(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PauliString> input;
    for (const auto& s : strings)
      if (rng() % 3 == 0) input.push_back(s);
    const auto groups = qubitwise_groups(input);
    std::vector<PauliString> seen;
    for (const auto& g : groups) {
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
          ASSERT_TRUE(qubitwise_commutes(g[i], g[j]));
          ASSERT_TRUE(commutes(g[i], g[j]));
        }
      seen.insert(seen.end(), g.begin(), g.end());
    }
    std::sort(seen.begin(), seen.end());
    std::sort(input.begin(), input.end());
    ASSERT_EQ(seen, input);
  }
}

TEST(qubitwise_groups, h2_jordan_wigner_needs_at_most_five_groups) {
  const auto m = build_h2_model(0.7414);
  const auto strings = m.h4.non_identity_strings();
  const auto groups = qubitwise_groups(strings);
  EXPECT_LE(groups.size(), 5u);
  // Exhaustive oracle: the four XY-type strings pairwise fail qubit-wise
  // commutation, and none shares a group with a Z string, so 1 + 4 groups is
  // the least possible.
  std::vector<PauliString> mixed;
  for (const auto& s : strings)
    if (s.str().find_first_of("XY") != std::string::npos) mixed.push_back(s);
  ASSERT_EQ(mixed.size(), 4u);
  for (std::size_t i = 0; i < mixed.size(); ++i)
    for (std::size_t j = i + 1; j < mixed.size(); ++j) EXPECT_FALSE(qubitwise_commutes(mixed[i], mixed[j]));
  EXPECT_EQ(groups.size(), 5u);
}
