#pragma once

#include "k3fix4/fibers.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace k3fix4 {

// One row of a classification table. Fields a table does not print stay at -1.
struct CaseRow {
    int m = -1;
    int r = -1;
    int l = -1;
    int n = -1;
    int n1 = -1;
    int n2 = -1;
    int k = -1;
    int a = -1;
    int g = -1;
    std::vector<std::string> fibers;  // type of C'
    std::vector<std::string> s_names; // S(sigma^2) candidates
    std::vector<std::string> t_names; // T(sigma^2)
    bool printed_twice = false;
    std::vector<std::string> trace;   // constraints that admitted the row

    int get(const std::string& column) const; // integer column by name; throws if unknown
};

struct GoldenTable {
    std::string id;
    std::string title;
    std::vector<std::string> columns;
    std::vector<CaseRow> rows;
};

struct GoldenExcludedT2 {
    int r, k, g, a;
    std::vector<std::string> lattices;
};

struct GoldenExcludedT3 {
    int r, k, a;
};

struct GoldenBound {
    int m_plus_l, k, g_max, a_max;
};

struct GoldenThm81 {
    int count = 0;
    std::vector<GoldenBound> bounds;
};

struct GoldenScenario {
    std::string id;
    FibrationScenario scenario;
    std::vector<Corollary1Row> rows;
};

struct GoldenTable4Row {
    int no = 0;
    std::string root_part;
    int mw_rank = 0;
    std::vector<int> torsion;
    std::vector<int> a_values;
    bool a_known = true;
};

struct GoldenPolyCoeff {
    std::string name;
    int power = 0;
    std::string value;
};

struct GoldenDiscriminants {
    std::vector<std::string> variables;
    std::string alpha;
    std::string beta;
    std::vector<GoldenPolyCoeff> coefficients;
    std::string y2_printed;
};

// Raw embedded JSON by file stem ("table1", "corollary1", ...). Throws if unknown.
std::string_view embedded_json(std::string_view name);
std::vector<std::string> embedded_names();

const GoldenTable& golden_table(const std::string& id); // t1 t2 t3 t5 t6 t7 prop2
const std::vector<GoldenExcludedT2>& golden_table2_excluded();
const std::vector<GoldenExcludedT3>& golden_table3_excluded();
const std::vector<std::string>& golden_table5_excluded_lattices();
const GoldenThm81& golden_thm81();
std::string golden_title(std::string_view name); // "title" field of an embedded file
const std::vector<GoldenScenario>& golden_corollary1();
const std::vector<GoldenTable4Row>& golden_table4();
const GoldenDiscriminants& golden_discriminants();

// Parse a case table from JSON text (used for fixtures as well as embedded data).
GoldenTable parse_golden_table(std::string_view json_text);

} // namespace k3fix4
