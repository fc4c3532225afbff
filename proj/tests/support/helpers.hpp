#pragma once

#include <functional>

#include "opinet/errors.hpp"

namespace opinet::test {

/// True when fn throws an opinet::Error with exactly this code.
inline bool has_code(const std::function<void()>& fn, errc expected) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == expected;
    }
    return false;
}

} // namespace opinet::test
