/*
   Copyright 2026 The atinf Authors

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

#ifndef ATINF_ALGEBRA_HPP
#define ATINF_ALGEBRA_HPP

#include "algebra/errors.hpp"
#include "algebra/rational.hpp"
#include "algebra/unipoly.hpp"
#include "algebra/ratfunc.hpp"
#include "algebra/algnum.hpp"
#include "algebra/roots.hpp"
#include "algebra/bipoly.hpp"
#include "algebra/bivariate.hpp"

#endif
