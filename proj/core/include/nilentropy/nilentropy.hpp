// Copyright 2026 The nilentropy Authors.
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


#ifndef NILENTROPY_NILENTROPY_HPP
#define NILENTROPY_NILENTROPY_HPP

#include "nilentropy/automorphism.hpp"
#include "nilentropy/ball.hpp"
#include "nilentropy/constructions.hpp"
#include "nilentropy/group.hpp"
#include "nilentropy/growth.hpp"
#include "nilentropy/hall.hpp"
#include "nilentropy/integer.hpp"
#include "nilentropy/io.hpp"
#include "nilentropy/lattice.hpp"
#include "nilentropy/matrix.hpp"
#include "nilentropy/polynomial.hpp"

#endif  // NILENTROPY_NILENTROPY_HPP
