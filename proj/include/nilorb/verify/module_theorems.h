// Copyright 2026 The nilorb Authors
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

#ifndef NILORB_VERIFY_MODULE_THEOREMS_H
#define NILORB_VERIFY_MODULE_THEOREMS_H

#include <cstdint>
#include <string>
#include <vector>

#include "nilorb/linear/linear_module.h"
#include "nilorb/verify/options.h"
#include "nilorb/verify/report.h"

namespace nilorb {

struct OrbitReport {
    std::uint64_t group_order = 1;
    /// Largest orbit size M and its smallest point.
    std::uint64_t max_orbit = 1;
    Point witness = 0;
    std::uint64_t witness_centralizer = 1;
    /// Smallest |C_H(v)| over v != 0 (|H| when V = 0).
    std::uint64_t min_centralizer = 1;
    Point min_centralizer_point = 0;
    std::uint64_t orbit_count = 0;
    /// Distinct orbit sizes, ascending.
    std::vector<std::uint64_t> orbit_sizes;
    bool regular_orbit = false;
};

/// Orbits of H on the points of V, one stabilizer computation per orbit.
/// H must act on the points of V.
OrbitReport orbit_extremes_on_module(const PermutationGroup& h, const LinearModule& v);

/// The same on a bare permutation group; point 0 plays the zero vector.
OrbitReport orbit_extremes(const PermutationGroup& h);

struct MainTheoremResult {
    std::uint64_t classes = 0;
    std::uint64_t even_classes = 0;
    std::uint64_t centralizer_failures = 0;
    std::uint64_t orbit_failures = 0;
    nlohmann::json first_failure;
    /// Least slack |H| / (p |C|^p) over the classes, as a pair.
    nlohmann::json tightest;
};

/// For every non-trivial nilpotent H <= G up to conjugacy: some v with
/// p |C_H(v)|^p <= |H| (p the least prime dividing |H|), and for even |H|
/// some v with 2 |H| <= |v^H|^2. G must act additively on V.
MainTheoremResult check_main_theorems(const PermutationGroup& g, const LinearModule& v,
                                      const VerifyOptions& options = {});

VerificationReport verify_main_theorems(const PermutationGroup& g, const LinearModule& v, const std::string& label,
                                        const VerifyOptions& options = {});

struct ModuleCase {
    std::string label;
    LinearModule module;
};

/// Natural modules of the irreducible solvable subgroups of GL(d,p) for each
/// (p, d), and when `pairwise` is set every direct sum of two of them: the
/// product action for distinct summands, the wreath action for a repeated one.
std::vector<ModuleCase> main_theorem_universe(const std::vector<std::pair<std::uint32_t, std::size_t>>& fields,
                                              bool pairwise);

VerificationReport main_theorems_report(const std::vector<ModuleCase>& cases, const VerifyOptions& options = {});

/// Subgroups H of Gamma(p^n) up to conjugacy with c = |H cap Gamma_0| and
/// f = |H : H cap Gamma_0|, compared with the annotated (c, f) rows for
/// |V| = p^n. Throws CapExceeded above 2^20 points.
VerificationReport gamma_case_report(std::uint32_t p, std::size_t n, const VerifyOptions& options = {});

/// The eight annotated fields (p, n).
std::vector<std::pair<std::uint32_t, std::size_t>> annotated_gamma_fields();

/// All annotated fields, one report.
VerificationReport gamma_cases_report(const VerifyOptions& options = {});

}  // namespace nilorb

#endif
