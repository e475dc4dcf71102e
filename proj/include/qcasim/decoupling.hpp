/*
   Copyright 2026 The qcasim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "qcasim/pauli.hpp"

// First-order average-Hamiltonian analysis of Bang-Bang pulse groups on an
// electron pair: an error term H is averaged to (1/|G|) sum_g g^dag H g,
// which for Pauli terms survives unchanged or cancels outright.

namespace qcasim {

struct PulseGroup {
    std::vector<PauliString> elements;  // unit coefficient, contains II
};

/// Validates closure (up to phase) and membership of the identity.
PulseGroup make_pulse_group(std::vector<PauliString> elements);

PulseGroup pulse_group_from_labels(const std::vector<std::string>& labels);

struct ErrorTerm {
    PauliString pauli;
    double coefficient = 1.0;
};

struct AveragedTerm {
    PauliString pauli;
    double original = 0.0;
    double surviving = 0.0;  // 0 or +-original for Pauli groups
};

struct AverageReport {
    std::vector<AveragedTerm> terms;
};

AverageReport average_hamiltonian(const std::vector<ErrorTerm>& terms,
                                  const PulseGroup& group);

/// The 8 leakage operators and the 3 logic operators of the pair error
/// taxonomy, as labels.
const std::vector<std::string>& leakage_operator_labels();
const std::vector<std::string>& logic_operator_labels();

struct SuppressionEntry {
    std::string label;
    bool suppressed = false;
};

struct SuppressionReport {
    std::vector<SuppressionEntry> leakage;  // the fixed 8 operators
    std::vector<SuppressionEntry> logic;    // XX, YY, ZZ
    std::vector<std::string> logic_surviving;
};

SuppressionReport suppression_report(const PulseGroup& group);

/// Group generated by the union of g1 and g2, phases canonicalized to +1.
/// Averaging under the composite equals sequential averaging.
PulseGroup compose_groups(const PulseGroup& g1, const PulseGroup& g2);

}  // namespace qcasim
