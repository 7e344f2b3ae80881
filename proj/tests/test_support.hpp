// Shared doctest glue for the unit tests.
#ifndef SDC_TESTS_TEST_SUPPORT_HPP
#define SDC_TESTS_TEST_SUPPORT_HPP

#include "doctest.h"
#include "oracles.hpp"
#include "sdc/integer.hpp"

namespace doctest {
template <>
struct StringMaker<__int128> {
    static String convert(__int128 v) { return sdc::to_string(v).c_str(); }
};
}  // namespace doctest

#endif
