#include <catch_amalgamated.hpp>

TEST_CASE("placeholder_test_cli") { CHECK(true); }
