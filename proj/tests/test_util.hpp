#pragma once

#include <string>

#include <doctest.h>

#include "anyonwalk/errors.hpp"

#define CHECK_ERROR_CODE(expr, expected)                          \
  do {                                                            \
    try {                                                         \
      (void)(expr);                                               \
      FAIL_CHECK("expected error " << (expected));                \
    } catch (const anyonwalk::AnyonWalkError& caught_) {          \
      CHECK(caught_.code() == std::string(expected));             \
    }                                                             \
  } while (false)

#define CHECK_ERROR_KIND(expr, expected_kind)                     \
  do {                                                            \
    try {                                                         \
      (void)(expr);                                               \
      FAIL_CHECK("expected an error");                            \
    } catch (const anyonwalk::AnyonWalkError& caught_) {          \
      CHECK(caught_.kind() == (expected_kind));                   \
    }                                                             \
  } while (false)
