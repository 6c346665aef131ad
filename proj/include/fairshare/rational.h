// Copyright 2026 The Authors.
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

#ifndef FAIRSHARE_RATIONAL_H_
#define FAIRSHARE_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fairshare {

// Exact arithmetic for every solver and verifier path. Values are always
// kept in canonical form (gcd-reduced, positive denominator).
using Rational = mpq_class;

// Accepts "p", "p/q", and plain decimals such as "0.25" or "-3.5".
// Throws InputError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Rounds to `digits` significant decimal digits.
double rounded(double value, int digits = 12);

}  // namespace fairshare

#endif  // FAIRSHARE_RATIONAL_H_
