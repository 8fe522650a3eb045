#pragma once

#include "c2p/error.hpp"
#include "doctest.h"

// Passes when `expr` throws c2p::Error carrying `expected_code`.
#define CHECK_ERROR_CODE(expr, expected_code)                                   \
  do {                                                                          \
    bool c2p_thrown_ = false;                                                   \
    try {                                                                       \
      (void)(expr);                                                             \
    } catch (const c2p::Error& c2p_err_) {                                      \
      c2p_thrown_ = true;                                                       \
      CHECK_MESSAGE(c2p_err_.code() == (expected_code), c2p_err_.what());       \
    }                                                                           \
    CHECK_MESSAGE(c2p_thrown_, "expected c2p::Error from " #expr);              \
  } while (false)
