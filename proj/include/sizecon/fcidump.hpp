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

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sizecon/errors.hpp"
#include "sizecon/fermion.hpp"

namespace sizecon {

struct FcidumpHeader {
  int norb = 0;
  int nelec = 0;
  int ms2 = 0;
};

struct FcidumpData {
  FcidumpHeader header;
  MoIntegrals integrals;
};

/// Writes integrals in FCIDUMP layout: header, then unique (ij|kl), then h_ij,
/// then the core constant on index line 0 0 0 0. Indices are 1-based.
inline std::string write_fcidump(const MoIntegrals& mo, int nelec, int ms2) {
  const int n = static_cast<int>(mo.n_orbitals);
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, " &FCI NORB=%d,NELEC=%d,MS2=%d,\n  ORBSYM=", n, nelec, ms2);
  out += buf;
  for (int i = 0; i < n; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  auto line = [&](double v, int i, int j, int k, int l) {
    std::snprintf(buf, sizeof buf, "%24.16E%4d%4d%4d%4d\n", v, i, j, k, l);
    out += buf;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = mo.two_body(i, j, k, l);
          if (std::abs(v) > kScreeningThreshold) line(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = mo.one_body(i, j);
      if (std::abs(v) > kScreeningThreshold) line(v, i + 1, j + 1, 0, 0);
    }
  line(mo.constant, 0, 0, 0, 0);
  return out;
}

namespace detail {

inline std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

inline bool parse_int(const std::string& s, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

inline FcidumpHeader parse_fcidump_header(const std::string& text, std::size_t first_line) {
  std::string body = text;
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::string tok;
  std::string key;
  bool have_norb = false, have_nelec = false;
  FcidumpHeader h;
  auto assign = [&](const std::string& k, const std::string& v) {
    if (v.empty()) return;
    int value = 0;
    if (k == "NORB" || k == "NELEC" || k == "MS2") {
      if (!parse_int(v, value)) throw ParseError(first_line, "header key " + k + " has non-integer value '" + v + "'");
      if (k == "NORB") h.norb = value, have_norb = true;
      if (k == "NELEC") h.nelec = value, have_nelec = true;
      if (k == "MS2") h.ms2 = value;
    }
  };
  while (in >> tok) {
    const std::string up = upper(tok);
    if (up == "&FCI" || up == "&END" || up == "/") continue;
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (key.empty()) throw ParseError(first_line, "unexpected header token '" + tok + "'");
      assign(key, tok);
      continue;
    }
    key = upper(tok.substr(0, eq));
    if (key.empty()) throw ParseError(first_line, "header token without key: '" + tok + "'");
    assign(key, tok.substr(eq + 1));
  }
  if (!have_norb) throw ParseError(first_line, "header is missing NORB");
  if (!have_nelec) throw ParseError(first_line, "header is missing NELEC");
  if (h.norb <= 0) throw ParseError(first_line, "NORB must be positive");
  return h;
}

}  // namespace detail

/// Parses FCIDUMP text into spatial MO integrals. Fortran 'D' exponents are
/// accepted; orbital-energy lines (i 0 0 0) are ignored.
inline FcidumpData parse_fcidump_integrals(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  std::string header;
  bool in_header = false, header_done = false;
  std::size_t header_line = 0;
  while (!header_done && std::getline(in, line)) {
    ++lineno;
    const std::string up = detail::upper(line);
    if (!in_header) {
      if (up.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (up.find("&FCI") == std::string::npos) throw ParseError(lineno, "expected '&FCI' header");
      in_header = true;
      header_line = lineno;
    }
    header += line + ' ';
    const auto end_pos = up.find("&END");
    std::string trimmed = up;
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (end_pos != std::string::npos || (!trimmed.empty() && trimmed.back() == '/')) header_done = true;
  }
  if (!header_done) throw ParseError(lineno, "unterminated FCIDUMP header (missing &END or /)");
  for (char& c : header)
    if (c == '/') c = ' ';

  FcidumpData data;
  data.header = detail::parse_fcidump_header(header, header_line);
  const int n = data.header.norb;
  MoIntegrals& mo = data.integrals;
  mo.n_orbitals = static_cast<std::size_t>(n);
  mo.one_body = Eigen::MatrixXd::Zero(n, n);
  mo.two_body = EriTensor(static_cast<std::size_t>(n));

  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    std::string tok;
    while (fields >> tok) f.push_back(tok);
    if (f.size() != 5) throw ParseError(lineno, "expected 'value i j k l', got " + std::to_string(f.size()) + " fields");
    std::string num = f[0];
    std::replace(num.begin(), num.end(), 'D', 'E');
    std::replace(num.begin(), num.end(), 'd', 'e');
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(lineno, "non-numeric integral value '" + f[0] + "'");
    }
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      if (!detail::parse_int(f[1 + k], idx[k])) throw ParseError(lineno, "non-integer index '" + f[1 + k] + "'");
      if (idx[k] < 0 || idx[k] > n)
        throw ParseError(lineno, "index " + std::to_string(idx[k]) + " out of range 0.." + std::to_string(n));
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mo.constant = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      mo.two_body.set_symmetric(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      mo.one_body(i - 1, j - 1) = v;
      mo.one_body(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy
    } else {
      throw ParseError(lineno, "invalid index pattern " + f[1] + " " + f[2] + " " + f[3] + " " + f[4]);
    }
  }
  return data;
}

inline FermionHamiltonian parse_fcidump(std::string_view text) {
  return from_mo_integrals(parse_fcidump_integrals(text).integrals);
}

}  // namespace sizecon
