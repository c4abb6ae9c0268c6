// Copyright 2026 The sparsecount Authors
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

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sparsecount {

/// Exact counts. Homomorphism counts outgrow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p/q" or "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  auto num = boost::multiprecision::numerator(x);
  auto den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace sparsecount
