// Copyright 2026 The randsieve Authors
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

#include <cstdint>
#include <map>
#include <memory>

#include "core/prime_table.hpp"

namespace testsupport {

// Tables are expensive at large limits; share them across test cases.
inline const randsieve::primes::PrimeTable& table_upto(std::uint64_t limit) {
  static std::map<std::uint64_t,
                  std::unique_ptr<randsieve::primes::PrimeTable>> cache;
  auto it = cache.find(limit);
  if (it == cache.end()) {
    auto table = std::make_unique<randsieve::primes::PrimeTable>(
        randsieve::primes::sieve_primes(limit));
    it = cache.emplace(limit, std::move(table)).first;
  }
  return *it->second;
}

}  // namespace testsupport
