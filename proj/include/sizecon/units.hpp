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

namespace sizecon::units {

/// Bohr radius in angstrom (CODATA 2018).
inline constexpr double kBohrAngstrom = 0.529177210903;
inline constexpr double kAngstromToBohr = 1.0 / kBohrAngstrom;

/// Reporting conversion; all internal energies are in hartree.
inline constexpr double kKcalPerHartree = 627.509474;

/// Chemical accuracy, kcal/mol.
inline constexpr double kChemicalAccuracy = 1.0;

inline constexpr double to_kcal(double hartree) { return hartree * kKcalPerHartree; }

}  // namespace sizecon::units
