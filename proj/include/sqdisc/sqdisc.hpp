/*
   Copyright 2026 The sqdisc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "sqdisc/atlas.hpp"
#include "sqdisc/bigint.hpp"
#include "sqdisc/certificate_io.hpp"
#include "sqdisc/coeff_set.hpp"
#include "sqdisc/constructions.hpp"
#include "sqdisc/discriminant.hpp"
#include "sqdisc/f2_polynomial.hpp"
#include "sqdisc/modular.hpp"
#include "sqdisc/polynomial.hpp"
#include "sqdisc/property_suites.hpp"
#include "sqdisc/resultant.hpp"
#include "sqdisc/roots.hpp"
