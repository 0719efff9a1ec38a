// omv - bounded Kripke-model verification for modal ontological arguments
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
#pragma once

namespace omv {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "omv-report/1";
}  // namespace omv
