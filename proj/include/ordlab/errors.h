// Copyright 2026 The ordlab Authors.
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

#ifndef ORDLAB_ERRORS_H_
#define ORDLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ordlab {

// Malformed input documents (bad JSON, missing fields, unparsable numbers).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of a mathematical operation does not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact post-condition check failed. Seeing one of these means a bug.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasisMismatch : public DomainError {
 public:
  BasisMismatch() : DomainError("scalars live over different radicand lists") {}
};

class DimensionMismatch : public DomainError {
 public:
  explicit DimensionMismatch(const std::string& what)
      : DomainError("dimension mismatch: " + what) {}
};

class NontotalOrder : public DomainError {
 public:
  NontotalOrder()
      : DomainError("defining vectors have a nontrivial joint integer kernel") {}
};

class RedundantVector : public DomainError {
 public:
  explicit RedundantVector(int index)
      : DomainError("defining vector " + std::to_string(index) +
                    " vanishes on the kernel of its predecessors"),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace ordlab

#endif  // ORDLAB_ERRORS_H_
