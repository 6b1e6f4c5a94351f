// Copyright 2026 The reversing Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef REVERSING_HPP_
#define REVERSING_HPP_

#include "reversing/braid.hpp"
#include "reversing/completeness.hpp"
#include "reversing/decision.hpp"
#include "reversing/diagram.hpp"
#include "reversing/engine.hpp"
#include "reversing/equivalence.hpp"
#include "reversing/export.hpp"
#include "reversing/garside.hpp"
#include "reversing/homogeneity.hpp"
#include "reversing/presentation.hpp"
#include "reversing/text.hpp"
#include "reversing/word.hpp"

#endif  // REVERSING_HPP_
