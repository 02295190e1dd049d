#pragma once

namespace etalab {

enum class Status { Pass, Fail, InsufficientPrecision };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::InsufficientPrecision:
      return "insufficient-precision";
  }
  return "?";
}

}  // namespace etalab
