#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3fix4 {

enum class FiberTag { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

struct KodairaFiber {
    FiberTag tag = FiberTag::I;
    int N = 0; // I_N, I*_N

    bool operator==(const KodairaFiber&) const = default;
};

int euler_number(const KodairaFiber& f);
// "I16", "I0*", "III*", ...
std::string to_string(const KodairaFiber& f);
KodairaFiber parse_fiber(const std::string& s);

enum class ActionKind { IIIa, IIIb, I0a, I0b, IIIsa, IIIsb };
constexpr std::size_t kActionCount = 6;
constexpr std::array<ActionKind, kActionCount> kActions = {ActionKind::IIIa, ActionKind::IIIb, ActionKind::I0a,
                                                           ActionKind::I0b,  ActionKind::IIIsa, ActionKind::IIIsb};

struct FiberAction {
    KodairaFiber fiber;
    char variant = 'a';
};

FiberAction fiber_action(ActionKind k);
std::string to_string(ActionKind k);       // "III a)", "I0* b)", ...
std::string type_name(ActionKind k);       // "III", "I0*", "III*"
char variant_of(ActionKind k);

struct ContributionVector {
    int e = 0;
    int dn = 0;
    int dk = 0;
    int da = 0;
    int ram_s = 0;
    int ram_s2 = 0;

    bool operator==(const ContributionVector&) const = default;
};

using ContributionTable = std::array<ContributionVector, kActionCount>;

const ContributionTable& default_contributions();
ContributionVector contribution(const FiberAction& fa); // throws on undefined variant

struct FibrationScenario {
    bool sigma_reducible = false;
    bool sigma2_reducible = false;
};

// The four scenarios in printed order.
std::array<FibrationScenario, 4> corollary1_scenarios();
std::string scenario_id(const FibrationScenario& s); // "irr_red", ...

using FiberCounts = std::array<int, kActionCount>;

struct Corollary1Row {
    std::optional<int> g_sigma;
    std::optional<int> g_sigma2;
    int n = 0;
    int k = 0;
    int a = 0;
    FiberCounts counts{};

    bool operator==(const Corollary1Row&) const = default;
};

bool canonical_less(const Corollary1Row& x, const Corollary1Row& y);
std::string fibers_to_string(const FiberCounts& c, bool ascii);
int euler_sum(const FiberCounts& c, const ContributionTable& t = default_contributions());

std::vector<Corollary1Row> enumerate_corollary1(const FibrationScenario& s,
                                                const ContributionTable& t = default_contributions());

// Base offsets the scenario contributes before fibers.
struct ScenarioBase {
    int k = 0;
    int a = 0;
    int alpha = 0;
};
ScenarioBase scenario_base(const FibrationScenario& s, std::optional<int> g_sigma);

struct UniquenessResult {
    bool unique = false;     // each column has full rank 6
    bool consistent = false; // each column's system is solvable
    ContributionTable solved{};
    std::vector<std::string> log;
};

// Treat the table entries as unknowns and solve the linear system the golden rows impose.
UniquenessResult solve_contributions(const std::vector<std::pair<FibrationScenario, Corollary1Row>>& rows);

} // namespace k3fix4
