#pragma once

#include <optional>
#include <utility>

#include "fairmatch/model.hpp"

namespace fairmatch {

enum class SolveStatus { kYes, kNo, kUnknown };

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Matching> matching;  // present on kYes for constructive solvers

  static SolveResult yes(Matching m) {
    return {SolveStatus::kYes, std::move(m)};
  }
  static SolveResult yes() { return {SolveStatus::kYes, std::nullopt}; }
  static SolveResult no() { return {SolveStatus::kNo, std::nullopt}; }
  static SolveResult unknown() { return {SolveStatus::kUnknown, std::nullopt}; }
};

}  // namespace fairmatch
