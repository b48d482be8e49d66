// Copyright 2026 The apmm Authors
// SPDX-License-Identifier: Apache-2.0

// Bundled case-study responses. The same text ships as data/org-a.resp and
// data/org-b.resp.

#pragma once

#include <string_view>

namespace apmm::case_studies {

/// Organization A, one rating per statement from the reference assessment.
inline constexpr std::string_view kOrgA = R"resp(# Copyright 2026 The apmm Authors
# SPDX-License-Identifier: Apache-2.0

# Case study A: per-statement ratings from the reference assessment.
@model apmm
@org Organization A
@rater consolidated

# Level 1: Independent Product Development
S.1.1.1 2
S.1.1.2 2
S.1.2.1 2
S.1.2.2 2
S.1.2.3 1
S.1.2.4 1
S.1.2.5 2
S.1.3.1 1
S.1.3.2 1
S.1.4.1 1
S.1.4.2 1
S.1.5.1 1
S.1.5.2 1
S.1.6.1 1
S.1.6.2 1

# Level 2: Standardized Infrastructure
S.2.1.1 1
S.2.1.2 2
S.2.1.3 2
S.2.2.1 2
S.2.2.2 1
S.2.2.3 1
S.2.2.4 1
S.2.3.1 3
S.2.3.2 4
S.2.3.3 3
S.2.4.1 1
S.2.4.2 1
S.2.4.3 1
S.2.5.1 3
S.2.5.2 4
S.2.5.3 4
S.2.6.1 4
S.2.6.2 4
S.2.6.3 3

# Level 3: Software Platform
S.3.1.1 4
S.3.1.2 4
S.3.1.3 4
S.3.1.4 4
S.3.2.1 3
S.3.2.2 3
S.3.2.3 4
S.3.2.4 4
S.3.2.5 4
S.3.3.1 4
S.3.3.2 4
S.3.3.3 4
S.3.3.4 4
S.3.4.1 4
S.3.4.2 4
S.3.5.1 3
S.3.5.2 3
S.3.5.3 4
S.3.5.4 4
S.3.6.1 4
S.3.6.2 4
S.3.6.3 4

# Level 4: Software Product Family
S.4.1.1 4
S.4.1.2 2
S.4.1.3 4
S.4.1.4 4
S.4.1.5 4
S.4.2.1 4
S.4.2.2 4
S.4.2.3 4
S.4.3.1 3
S.4.3.2 2
S.4.3.3 3
S.4.4.1 4
S.4.4.2 4
S.4.4.3 4
S.4.5.1 4
S.4.5.2 3
S.4.5.3 3
S.4.5.4 3
S.4.6.1 2
S.4.6.2 3

# Level 5: Configurable Product Base
S.5.1.1 3
S.5.1.2 2
S.5.1.3 2
S.5.1.4 2
S.5.2.1 3
S.5.2.2 3
S.5.2.3 2
S.5.3.1 3
S.5.3.2 3
S.5.3.3 3
S.5.4.1 3
S.5.4.2 2
S.5.4.3 2
S.5.5.1 3
S.5.5.2 2
S.5.5.3 3
S.5.5.4 3
S.5.6.1 2
S.5.6.2 2
)resp";

/// Organization B. Only per-level agreed counts are known, so these ratings
/// are constructed to reproduce them. The reference counts for level 5 are 0
/// agreed statements overall but 1 agreed VM statement, which no response can
/// satisfy (the VM statements are part of the level); this fixture keeps the
/// overall count and has 0 VM agreements there.
inline constexpr std::string_view kOrgB = R"resp(# Copyright 2026 The apmm Authors
# SPDX-License-Identifier: Apache-2.0

# Case study B: constructed ratings reproducing the reference per-level counts.
@model apmm
@org Organization B
@rater consolidated

# Level 1: Independent Product Development
S.1.1.1 3
S.1.1.2 3
S.1.2.1 3
S.1.2.2 4
S.1.2.3 3
S.1.2.4 2
S.1.2.5 3
S.1.3.1 3
S.1.3.2 2
S.1.4.1 4
S.1.4.2 3
S.1.5.1 2
S.1.5.2 1
S.1.6.1 2
S.1.6.2 1

# Level 2: Standardized Infrastructure
S.2.1.1 4
S.2.1.2 3
S.2.1.3 4
S.2.2.1 3
S.2.2.2 3
S.2.2.3 4
S.2.2.4 2
S.2.3.1 3
S.2.3.2 4
S.2.3.3 3
S.2.4.1 4
S.2.4.2 3
S.2.4.3 3
S.2.5.1 3
S.2.5.2 4
S.2.5.3 3
S.2.6.1 3
S.2.6.2 4
S.2.6.3 3

# Level 3: Software Platform
S.3.1.1 3
S.3.1.2 3
S.3.1.3 2
S.3.1.4 2
S.3.2.1 3
S.3.2.2 3
S.3.2.3 2
S.3.2.4 2
S.3.2.5 1
S.3.3.1 3
S.3.3.2 2
S.3.3.3 2
S.3.3.4 1
S.3.4.1 3
S.3.4.2 3
S.3.5.1 3
S.3.5.2 3
S.3.5.3 2
S.3.5.4 1
S.3.6.1 3
S.3.6.2 2
S.3.6.3 1

# Level 4: Software Product Family
S.4.1.1 3
S.4.1.2 2
S.4.1.3 1
S.4.1.4 2
S.4.1.5 1
S.4.2.1 2
S.4.2.2 1
S.4.2.3 2
S.4.3.1 2
S.4.3.2 1
S.4.3.3 2
S.4.4.1 1
S.4.4.2 2
S.4.4.3 1
S.4.5.1 3
S.4.5.2 3
S.4.5.3 2
S.4.5.4 1
S.4.6.1 2
S.4.6.2 1

# Level 5: Configurable Product Base
S.5.1.1 2
S.5.1.2 1
S.5.1.3 1
S.5.1.4 2
S.5.2.1 2
S.5.2.2 1
S.5.2.3 1
S.5.3.1 2
S.5.3.2 1
S.5.3.3 1
S.5.4.1 2
S.5.4.2 1
S.5.4.3 1
S.5.5.1 2
S.5.5.2 1
S.5.5.3 2
S.5.5.4 1
S.5.6.1 1
S.5.6.2 1
)resp";

}  // namespace apmm::case_studies
