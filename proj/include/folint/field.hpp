// Copyright 2026 The folint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Coefficient-field protocol shared by the polynomial templates.
//
// Two zero tests exist. structurally_zero() looks at the stored
// representation only and never fails. decide_zero() is the semantic test:
// over a product of fields (a tower with reducible moduli) an element may be
// zero on some components and a unit on others, and deciding it raises a
// split. Over Q both tests agree.

#include <concepts>
#include <string>

#include "folint/rational.hpp"

namespace folint {

template <class K>
concept ExactField = std::regular<K> && requires(const K a, const K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { structurally_zero(a) } -> std::convertible_to<bool>;
  { decide_zero(a) } -> std::convertible_to<bool>;
  { to_text(a) } -> std::convertible_to<std::string>;
  K(0);
  K(1);
};

inline bool structurally_zero(const Rational& q) noexcept { return q.is_zero(); }
inline bool decide_zero(const Rational& q) noexcept { return q.is_zero(); }
inline std::string to_text(const Rational& q) { return q.to_string(); }

/// Rational value of a coefficient, if it is a plain rational.
inline std::optional<Rational> as_rational(const Rational& q) { return q; }

}  // namespace folint
