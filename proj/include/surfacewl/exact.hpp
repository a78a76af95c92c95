// Copyright 2026 the surfacewl authors
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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swl {

using Integer = mpz_class;
using Rational = mpq_class;

// Library-wide error taxonomy. The CLI maps DomainError to exit status 1
// and BudgetError to exit status 2.
class DomainError : public std::runtime_error {
 public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

 private:
    std::string name_;
};

class BudgetError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

class SizeLimitError : public BudgetError {
 public:
    using BudgetError::BudgetError;
};

Integer factorial(int k);
Integer binomial(int n, int k);
Integer falling_factorial(long n, int k);
Integer stirling2(int n, int k);

// r^e for any integer e; throws on 0^negative.
Rational power(const Rational& r, long e);
Integer power(const Integer& z, unsigned long e);

Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Parses "p", "p/q" or a plain decimal integer.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

}  // namespace swl
