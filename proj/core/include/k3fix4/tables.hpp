#pragma once

#include "k3fix4/golden.hpp"
#include "k3fix4/lefschetz.hpp"

#include <string>
#include <vector>

namespace k3fix4 {

// Generic shape: one curve of genus gamma and j rational curves fixed by the involution.
// Throws Error unless every output is a nonnegative integer and d <= min(rho, 22 - rho).
EigenspaceRanks ranks_from_fixed_locus(int gamma, int j, int alpha);

struct ExclusionRule {
    std::string id;
    std::string table_id;
    std::string citation; // sentence of the proof that removes the case
};

const std::vector<ExclusionRule>& exclusion_rules();
const ExclusionRule& exclusion_rule(const std::string& id);

struct Excluded {
    std::string rule_id;
    std::string citation;
    CaseRow row;
    std::string detail; // e.g. lattice candidates
};

struct Enumeration {
    std::string table_id;
    std::vector<CaseRow> rows;
    std::vector<Excluded> excluded;
};

Enumeration enumerate_prop2();
Enumeration enumerate_table1();
Enumeration enumerate_table2();
Enumeration enumerate_table3();
Enumeration enumerate_table5();
Enumeration enumerate_table6();
Enumeration enumerate_table7();
// Rows carry (m, l, k, g, a, n1, n2); r is filled from the rank relation.
Enumeration enumerate_theorem81();

struct Thm81Counts {
    std::size_t coarse = 0; // (m, l, k, g, a)
    std::size_t tuple = 0;  // (m, l, k, g, a, n2)
    std::size_t fine = 0;   // (m, l, k, g, a, n2, n1)
};
Thm81Counts theorem81_counts(const Enumeration& e);
// max g and max a per k
std::vector<GoldenBound> theorem81_bounds(const Enumeration& e);

Enumeration enumerate(const std::string& table_id); // t1 t2 t3 t5 t6 t7 prop2 thm81

// Integer key columns of a table (lattice and fiber columns dropped).
std::vector<std::string> integer_columns(const GoldenTable& t);

struct TableDiff {
    std::string table_id;
    std::vector<CaseRow> missing; // golden rows not produced
    std::vector<CaseRow> extra;   // produced rows not in golden
    bool match() const { return missing.empty() && extra.empty(); }
};

// Order-insensitive, duplicates collapsed. Keys on the integer columns, plus fiber and
// lattice names when with_payload is set.
TableDiff diff_rows(const GoldenTable& golden, const std::vector<CaseRow>& rows, bool with_payload);
TableDiff diff_table(const std::string& table_id, const GoldenTable& golden, const Enumeration& e);

// Rows reordered to the golden order; rows without a golden counterpart follow.
std::vector<CaseRow> in_golden_order(const GoldenTable& golden, const std::vector<CaseRow>& rows);

// Name checks for the lattice columns. Empty result means every name agrees with its row.
std::vector<std::string> check_table5_lattices(const GoldenTable& golden);
std::vector<std::string> check_table6_lattices(const GoldenTable& golden);
// Each lattice of the t2 excluded sub-table must have the profile its tuple forces.
std::vector<std::string> check_table2_excluded_lattices(const Enumeration& e);

// Base constraints each golden row must satisfy. Empty result means sound.
std::vector<std::string> soundness_violations(const std::string& table_id, const GoldenTable& golden);

} // namespace k3fix4
