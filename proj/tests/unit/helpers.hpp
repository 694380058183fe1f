#pragma once

#include <doctest.h>

#include <utility>

#include "scenetemp/errors.hpp"

namespace testutil {

// Runs fn and checks that it throws a scenetemp::Error with the given code.
template <typename Fn>
void check_error(scenetemp::ErrorCode code, Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
    FAIL_CHECK("expected " << scenetemp::error_code_name(code)
                           << ", nothing thrown");
  } catch (const scenetemp::Error& e) {
    CHECK_MESSAGE(e.code() == code, "expected "
                                        << scenetemp::error_code_name(code)
                                        << ", got " << e.code_name() << ": "
                                        << e.what());
  }
}

}  // namespace testutil
