//   Copyright 2026 The Wirtinger Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

#pragma once

#include <span>

#include "wirtinger/core.hpp"
#include "wirtinger/graph.hpp"
#include "wirtinger/primitives.hpp"

namespace wirtinger {

/// A primal value with a tangent of the same shape.
struct Dual {
  Dual(Tensor primal_, Tensor tangent_);

  Tensor primal;
  Tensor tangent;
};

/// dz * t + dzbar * conj(t), reshaped to `out`.
Tensor apply_wirtinger(const WirtingerPair& pair, const Tensor& tangent, const Shape& out);

/// Pushes (primal, tangent) pairs through one primitive. Each input
/// contributes dz_k t_k + dzbar_k conj(t_k) to the output tangent; inputs
/// with an all-zero tangent are skipped.
Dual push_primitive(const Primitive& p, std::span<const Dual> inputs, const Attributes& attrs = {});

struct JvpResult {
  Tensor value;
  Tensor tangent;
};

/// f(z) and the latent JVP of f at z applied to z_tangent.
JvpResult jvp(const Graph& graph, const Tensor& z, const Tensor& z_tangent);

/// Wirtinger derivatives of a scalar-to-scalar graph, recovered from the two
/// pushes with tangents 1 and i.
WirtingerPair wirtinger_of(const Graph& graph, Complex z);

}  // namespace wirtinger
