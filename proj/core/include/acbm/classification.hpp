#pragma once

#include <string>
#include <vector>

#include "acbm/geometry.hpp"

namespace acbm {

enum class SubLabel { F4, F5, F6, Mixed, NotApplicable };

std::string to_string(SubLabel label);

struct FailedIdentity {
    std::string identity;
    std::vector<int> witness;  // zero-based frame indices
    std::string residual;
};

/// Class membership verdicts. The theta/theta* sub-split is evaluated only
/// inside U3 = F4+F5+F6; `note` explains the verdict context when the model
/// sits in U1 without U3, where the split cannot separate the extra summand.
struct ClassReport {
    bool f0 = false;
    bool u = false;
    bool u1 = false;
    bool u2 = false;
    bool u3 = false;
    SubLabel sub_label = SubLabel::NotApplicable;
    std::vector<FailedIdentity> failed_identities;
    std::string note;

    Report to_report() const;
};

/// Decides F0, U, U1, U2, U3 and the F4/F5/F6 split by exact component
/// identities over the whole frame. Requires a structurally valid model.
ClassReport classify(const AlgebraModel& m);

}  // namespace acbm
