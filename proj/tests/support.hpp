#pragma once

#include "doctest.h"
#include "plaus/error.hpp"

/// Code of the plaus::Error thrown by fn; fails the test when none is.
template <class Fn>
plaus::Errc code_of(Fn&& fn) {
    try {
        fn();
    } catch (const plaus::Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return plaus::Errc::validation;
}
