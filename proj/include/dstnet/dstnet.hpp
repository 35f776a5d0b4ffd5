// Copyright 2026 The dstnet Authors
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

// dstnet: fully orthogonal recursive decompositions of the discrete sine
// transforms (first and third kind) and the discrete Fourier transform into
// networks of 2x2 gates, with a fast single-particle executor, an exact
// fermionic Fock-space simulator for the second-quantized networks, and the
// free-fermion chain diagonalization built on top.

#include "dstnet/dense.hpp"
#include "dstnet/exec.hpp"
#include "dstnet/fock.hpp"
#include "dstnet/gate.hpp"
#include "dstnet/physics.hpp"
#include "dstnet/plan_json.hpp"
#include "dstnet/planner.hpp"
#include "dstnet/second_quantize.hpp"
