#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "extlie/free_algebra.hpp"

namespace extlie::freealg {

// Script lines, one statement each:
//   # comment
//   char in {0, 5, 7}          characteristics to run under (default {0})
//   alphabet X, Y, V           before any other statement (default X, Y)
//   let NAME = EXPR
//   rule WORD -> EXPR          appended to the active rule list
//   assert reduce(EXPR) == EXPR
//   assert words(N) == {1, X, XY}
// The statements are replayed from scratch once per characteristic.

struct AssertionResult {
  std::size_t line = 0;
  std::string statement;
  bool ok = false;
  /// reduce(lhs) - rhs for reduce assertions, or the actual word set.
  std::string residual;
};

struct CharacteristicRun {
  std::int64_t characteristic = 0;
  std::vector<AssertionResult> assertions;
  bool ok = true;
};

struct CertificateReport {
  std::string alphabet;
  std::vector<std::int64_t> characteristics;
  std::vector<CharacteristicRun> runs;
  std::size_t assertion_count = 0;
  bool ok = true;
};

/// Throws ParseError (with the line number) on malformed scripts.
CertificateReport run_certificate(std::string_view script);

}  // namespace extlie::freealg
