// Copyright 2026 The reachpipe Authors
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

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace reachpipe {

/// sum_k coefficients[k] * k + constant.
struct LinearExpression {
  std::map<std::string, double> coefficients;
  double constant = 0.0;

  double coefficient(const std::string& name) const;
  /// True when every coefficient is exactly zero.
  bool is_constant() const;
  /// Throws Error if a referenced name is missing from `env`.
  double evaluate(const std::map<std::string, double>& env) const;

  LinearExpression& operator+=(const LinearExpression& o);
  LinearExpression& operator-=(const LinearExpression& o);
  LinearExpression scaled(double s) const;

  friend bool operator==(const LinearExpression&, const LinearExpression&) = default;
};

std::string to_string(const LinearExpression& e);

/**
 * Arithmetic expression tree over real literals and identifiers.
 *
 * Flow right-hand sides are kept in this form inside a ModelDocument because
 * parameters such as mass are only bound to numbers at the network level;
 * linearize() turns the tree into a LinearExpression once constants have
 * been substituted. Equality ignores source offsets.
 */
struct Expr {
  enum class Op { kNumber, kIdent, kNeg, kAdd, kSub, kMul, kDiv };

  Op op = Op::kNumber;
  double value = 0.0;
  std::string name;
  std::vector<Expr> args;
  std::size_t offset = 0;

  static Expr number(double v, std::size_t offset = 0);
  static Expr ident(std::string n, std::size_t offset = 0);
  static Expr unary(Op op, Expr a, std::size_t offset = 0);
  static Expr binary(Op op, Expr a, Expr b, std::size_t offset = 0);

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses `expr := term (('+'|'-') term)*`, with `*`, `/`, unary minus and
/// parentheses. Reported offsets are shifted by `base_offset`.
Expr parse_expr(std::string_view text, std::size_t base_offset = 0);

/// Text that parse_expr maps back to an equal tree.
std::string to_string(const Expr& e);

std::set<std::string> identifiers(const Expr& e);

/// Replaces every identifier by `replace(name)`.
Expr substitute(const Expr& e, const std::function<Expr(const std::string&)>& replace);

/// Throws NonlinearTermError when two non-constant factors multiply or a
/// non-constant appears in a denominator.
LinearExpression linearize(const Expr& e);

}  // namespace reachpipe
