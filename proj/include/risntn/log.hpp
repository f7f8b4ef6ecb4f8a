// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef risntn_log_H
#define risntn_log_H

#include <functional>
#include <string>

namespace risntn
{
    using WarningSink = std::function<void(const std::string &)>;

    // Emits a warning through the installed sink (stderr by default). Thread-safe.
    void warn(const std::string &message);

    // Replaces the sink and returns the previous one. Pass nullptr to restore stderr.
    WarningSink set_warning_sink(WarningSink sink);
}

#endif
