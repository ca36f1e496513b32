// Copyright 2026 The sunitary Authors
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

#include "sunitary/channels.hpp"
#include "sunitary/errors.hpp"
#include "sunitary/isorecovery.hpp"
#include "sunitary/maprep.hpp"
#include "sunitary/matcore.hpp"
#include "sunitary/subalgebra.hpp"
#include "sunitary/twistbrack.hpp"
