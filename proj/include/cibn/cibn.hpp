// Copyright 2026 The cibn Authors
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

#pragma once

#include "cibn/bench.hpp"
#include "cibn/case_series.hpp"
#include "cibn/compare.hpp"
#include "cibn/dsep.hpp"
#include "cibn/eliminate.hpp"
#include "cibn/encoding.hpp"
#include "cibn/error.hpp"
#include "cibn/factor.hpp"
#include "cibn/family.hpp"
#include "cibn/graph.hpp"
#include "cibn/inference_types.hpp"
#include "cibn/io.hpp"
#include "cibn/network.hpp"
#include "cibn/noisy_adder.hpp"
#include "cibn/noisy_or.hpp"
#include "cibn/oracle.hpp"
#include "cibn/ordering.hpp"
#include "cibn/reorder.hpp"
#include "cibn/table.hpp"
#include "cibn/variable.hpp"
