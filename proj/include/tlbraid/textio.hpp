/* Copyright 2026 The tlbraid Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

// Plain-text serialization of fields, matrices and bundles.
//
//   GF p d c_0 ... c_d
//   REP n r alpha
//   MAT rows cols
//   <rows x cols encoded entries>
//   ...

#include <iosfwd>
#include <string>

#include "tlbraid/field.hpp"
#include "tlbraid/linalg.hpp"
#include "tlbraid/rep.hpp"
#include "tlbraid/unitary.hpp"

namespace tlbraid {

Field read_field_header(std::istream& in);

void write_matrix(std::ostream& out, const Matrix& m);
Matrix read_matrix(std::istream& in, const Field& field);

std::string write_bundle(const RepBundle& bundle);
// Rebuilds params and case; checks the matrix count and sizes.
RepBundle read_bundle(const std::string& text);

// Conjugated bundle, then FORM and CONGRUENCE sections.
std::string write_unitarized(const Unitarized& u);

}  // namespace tlbraid
