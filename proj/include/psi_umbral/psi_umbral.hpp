/*
   Copyright 2026 The psi-umbral Authors

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

#ifndef PSI_UMBRAL_PSI_UMBRAL_HPP
#define PSI_UMBRAL_PSI_UMBRAL_HPP

// Everything except the command-line front end (cli.hpp), which also needs CLI11.

#include "error.hpp"
#include "rational.hpp"
#include "polynomial.hpp"
#include "series.hpp"
#include "psi_sequence.hpp"
#include "psi_spec.hpp"
#include "graded_operator.hpp"
#include "operators.hpp"
#include "umbral.hpp"
#include "expansion.hpp"
#include "psi_product.hpp"
#include "integration.hpp"
#include "special_functions.hpp"
#include "json_io.hpp"
#include "expr_parser.hpp"
#include "job_spec.hpp"
#include "verify.hpp"

#endif // PSI_UMBRAL_PSI_UMBRAL_HPP
