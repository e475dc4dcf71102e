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

#include "qcasim/decoupling.hpp"

#include <algorithm>
#include <cmath>

namespace qcasim {

namespace {

PauliString canonical(PauliString p) {
    p.coeff = 1.0;
    return p;
}

bool contains(const std::vector<PauliString>& set, const PauliString& p) {
    return std::any_of(set.begin(), set.end(), [&](const PauliString& q) {
        return q.factors == p.factors;
    });
}

void check_group(const std::vector<PauliString>& elements) {
    if (elements.empty()) throw NotAGroup("group is empty");
    const std::size_t n = elements[0].factors.size();
    bool has_identity = false;
    for (const PauliString& e : elements) {
        if (e.factors.size() != n)
            throw NotAGroup("elements act on different qubit counts");
        if (std::abs(e.coeff - Complex(1.0, 0.0)) > 1e-12)
            throw NotAGroup("elements must have unit coefficient");
        if (std::all_of(e.factors.begin(), e.factors.end(),
                        [](Pauli f) { return f == Pauli::I; }))
            has_identity = true;
    }
    if (!has_identity) throw NotAGroup("identity string missing");
    for (const PauliString& a : elements)
        for (const PauliString& b : elements)
            if (!contains(elements, canonical(pauli_mul(a, b))))
                throw NotAGroup("not closed under multiplication: " +
                                pauli_label(a) + " * " + pauli_label(b));
}

}  // namespace

PulseGroup make_pulse_group(std::vector<PauliString> elements) {
    for (PauliString& e : elements) e = canonical(e);
    // dedupe
    std::vector<PauliString> unique;
    for (const PauliString& e : elements)
        if (!contains(unique, e)) unique.push_back(e);
    check_group(unique);
    return PulseGroup{std::move(unique)};
}

PulseGroup pulse_group_from_labels(const std::vector<std::string>& labels) {
    std::vector<PauliString> elements;
    elements.reserve(labels.size());
    for (const std::string& l : labels) elements.push_back(pauli_from_label(l));
    return make_pulse_group(std::move(elements));
}

AverageReport average_hamiltonian(const std::vector<ErrorTerm>& terms,
                                  const PulseGroup& group) {
    check_group(group.elements);
    AverageReport report;
    report.terms.reserve(terms.size());
    for (const ErrorTerm& term : terms) {
        if (!std::isfinite(term.coefficient))
            throw ValidationError("non-finite error coefficient");
        // g^dag P g = +-P; the average scales by
        // (commuting - anticommuting) / |G|.
        int balance = 0;
        for (const PauliString& g : group.elements)
            balance += pauli_anticommutes(g, term.pauli) ? -1 : 1;
        const double fraction =
            static_cast<double>(balance) / static_cast<double>(group.elements.size());
        report.terms.push_back(
            {term.pauli, term.coefficient, term.coefficient * fraction});
    }
    return report;
}

const std::vector<std::string>& leakage_operator_labels() {
    static const std::vector<std::string> labels = {
        "XI", "IX", "YI", "IY", "XZ", "ZX", "YZ", "ZY"};
    return labels;
}

const std::vector<std::string>& logic_operator_labels() {
    static const std::vector<std::string> labels = {"XX", "YY", "ZZ"};
    return labels;
}

SuppressionReport suppression_report(const PulseGroup& group) {
    const auto evaluate = [&](const std::vector<std::string>& labels) {
        std::vector<ErrorTerm> terms;
        for (const std::string& l : labels)
            terms.push_back({pauli_from_label(l), 1.0});
        return average_hamiltonian(terms, group);
    };

    SuppressionReport report;
    const AverageReport leak = evaluate(leakage_operator_labels());
    for (const AveragedTerm& t : leak.terms)
        report.leakage.push_back(
            {pauli_label(t.pauli), std::abs(t.surviving) <= 1e-12});
    const AverageReport logic = evaluate(logic_operator_labels());
    for (const AveragedTerm& t : logic.terms) {
        const bool suppressed = std::abs(t.surviving) <= 1e-12;
        report.logic.push_back({pauli_label(t.pauli), suppressed});
        if (!suppressed) report.logic_surviving.push_back(pauli_label(t.pauli));
    }
    return report;
}

PulseGroup compose_groups(const PulseGroup& g1, const PulseGroup& g2) {
    check_group(g1.elements);
    check_group(g2.elements);
    if (g1.elements[0].factors.size() != g2.elements[0].factors.size())
        throw LengthMismatch("groups act on different qubit counts");

    std::vector<PauliString> closure = g1.elements;
    for (const PauliString& e : g2.elements)
        if (!contains(closure, e)) closure.push_back(canonical(e));
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = closure.size();
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                const PauliString p =
                    canonical(pauli_mul(closure[i], closure[j]));
                if (!contains(closure, p)) {
                    closure.push_back(p);
                    grew = true;
                }
            }
    }
    return make_pulse_group(std::move(closure));
}

}  // namespace qcasim
