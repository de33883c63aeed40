// Copyright 2026 The dyckcluster Authors.
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

#ifndef DYCKCLUSTER_DYCKCLUSTER_HPP_
#define DYCKCLUSTER_DYCKCLUSTER_HPP_

#include "dyckcluster/bijection.hpp"
#include "dyckcluster/coloring.hpp"
#include "dyckcluster/compat.hpp"
#include "dyckcluster/error.hpp"
#include "dyckcluster/expansion.hpp"
#include "dyckcluster/laurent.hpp"
#include "dyckcluster/paths.hpp"
#include "dyckcluster/quantum.hpp"

#endif  // DYCKCLUSTER_DYCKCLUSTER_HPP_
