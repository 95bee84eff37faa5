#pragma once

#include "k3fix4/fibers.hpp"
#include "k3fix4/golden.hpp"
#include "k3fix4/tables.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3fix4 {

// Test hooks: replace embedded data or the contribution table.
struct VerifyOptions {
    std::map<std::string, GoldenTable> golden_override;
    std::optional<std::vector<GoldenScenario>> corollary1_override;
    std::optional<ContributionTable> contributions;
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::vector<std::string> details;
};

struct Corollary1Diff {
    std::string scenario;
    std::size_t enumerated = 0;
    std::size_t golden = 0;
    std::vector<Corollary1Row> missing;
    std::vector<Corollary1Row> extra;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::map<std::string, TableDiff> diffs;
    std::vector<Corollary1Diff> corollary1;

    bool ok() const;
    const CheckResult* find(const std::string& id) const;
};

VerifyReport verify_all(const VerifyOptions& opts = {});

// "m=6 r=6 l=4 n=4 k=0 a=0 fiber=I0"
std::string describe_row(const CaseRow& row, const std::vector<std::string>& columns);
std::string describe_row(const Corollary1Row& row);

} // namespace k3fix4
