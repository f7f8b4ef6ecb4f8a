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

#include "risntn/log.hpp"

#include <iostream>
#include <mutex>

namespace risntn
{
    namespace
    {
        std::mutex sink_mutex;
        WarningSink current_sink;
    }

    void warn(const std::string &message)
    {
        std::lock_guard lock(sink_mutex);
        if (current_sink)
            current_sink(message);
        else
            std::cerr << "ris-ntn-sim: warning: " << message << '\n';
    }

    WarningSink set_warning_sink(WarningSink sink)
    {
        std::lock_guard lock(sink_mutex);
        std::swap(current_sink, sink);
        return sink;
    }
}
