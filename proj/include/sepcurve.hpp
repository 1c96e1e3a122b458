/*
   Copyright 2026 The sepcurve Authors

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

#include "sepcurve/algebra.hpp"
#include "sepcurve/analysis.hpp"
#include "sepcurve/criteria.hpp"
#include "sepcurve/critical.hpp"
#include "sepcurve/errors.hpp"
#include "sepcurve/funcfield.hpp"
#include "sepcurve/linear_factor.hpp"
#include "sepcurve/parse.hpp"
#include "sepcurve/polynomial.hpp"
#include "sepcurve/rational.hpp"
#include "sepcurve/rational_function.hpp"
#include "sepcurve/report_json.hpp"
#include "sepcurve/witness.hpp"
