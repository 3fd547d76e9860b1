/*
   Copyright 2026 The cyclofield Authors

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

#include <string_view>

#include "cff/gf.hpp"
#include "cff/poly.hpp"

namespace cff {

// Literal syntax shared by the CLI and reports. Elements are integers or
// polynomials in `g` (the class of T), e.g. `g+2`, `2*g^3+1`. Polynomials use
// the variable `T` (moduli) or `v` (curve coordinates), parsed identically:
// `T^2+g*T+1`, `(g+1)*T^2-1`. All failures throw ParseError.

FieldElem parse_element(const FieldCtx& ctx, std::string_view text);
Poly parse_poly(const FieldCtx& ctx, std::string_view text);

}  // namespace cff
