// Copyright 2026 The divsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIVSEL_REPORT_JSON_H_
#define DIVSEL_REPORT_JSON_H_

// JSON documents for every report type. Keys keep insertion order so the
// output is stable; the matching schemas live in schemas/.

#include <nlohmann/json.hpp>

#include "divsel/coreset_runner.h"
#include "divsel/greedy.h"
#include "divsel/metrics.h"
#include "divsel/oracle.h"

namespace divsel {

using Json = nlohmann::ordered_json;

Json ToJson(const RunReport& report);
Json ToJson(const ApproximationReport& report);
Json ToJson(const MultilabelScores& scores);
Json ToJson(const NicenessReport& report);
Json ToJson(const ObjectiveValue& value);

}  // namespace divsel

#endif  // DIVSEL_REPORT_JSON_H_
