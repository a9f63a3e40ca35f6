/*
   Copyright 2026 The rankstair authors

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

#ifndef RANKSTAIR_IO_HPP
#define RANKSTAIR_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rankstair/fields.hpp"
#include "rankstair/matrix.hpp"

namespace rankstair {

// RMX1 matrix files. Header:
//   RMX1 p=<p> s=<s> m=<m> rows=<r> cols=<c> basepoly=<c0,c1,...> extpoly=<c0,c1,...>
// followed by r lines of c entries; each entry gives the m base-field
// coordinates as v1:v2:...:vm, each v the base-p value encoding of the F_q
// element, constant term first. Base-field matrices use m=1 with the trivial
// extpoly 0,1. Writers emit a canonical form so round-trips are bit-exact.

void write_ext_matrix(std::ostream& os, const FieldTower& T, const ExtMatrix& M);
void write_base_matrix(std::ostream& os, const SmallField& F, const BaseMatrix& M);

/// Reads an RMX1 matrix together with its tower. Throws std::runtime_error
/// on malformed input.
std::pair<FieldTower, ExtMatrix> read_ext_matrix(std::istream& is);

/// Reads an m=1 RMX1 matrix over F_q.
std::pair<SmallField, BaseMatrix> read_base_matrix(std::istream& is);

/// Tower line used inside composite files:
///   TWR1 p=<p> s=<s> m=<m> basepoly=<...> extpoly=<...>
void write_tower_line(std::ostream& os, const FieldTower& T);
FieldTower read_tower_line(std::istream& is);

// Convenience file wrappers.
void save_ext_matrix(const std::string& path, const FieldTower& T, const ExtMatrix& M);
std::pair<FieldTower, ExtMatrix> load_ext_matrix(const std::string& path);
void save_base_matrix(const std::string& path, const SmallField& F, const BaseMatrix& M);
std::pair<SmallField, BaseMatrix> load_base_matrix(const std::string& path);

std::string format_poly(const std::vector<fq_t>& poly);
std::vector<fq_t> parse_poly(const std::string& s);
std::string format_element(const FieldTower& T, const fq_t* coeffs);

}  // namespace rankstair

#endif  // RANKSTAIR_IO_HPP
