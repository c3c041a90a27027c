// Copyright 2026 The etpa-interferometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "etpa/spectral_model.hpp"
#include "etpa/loss_filters.hpp"
#include "etpa/interferometry.hpp"
#include "etpa/fock_oracle.hpp"
#include "etpa/analysis.hpp"
#include "etpa/scenario.hpp"
#include "etpa/report.hpp"
#include "etpa/pipeline.hpp"
