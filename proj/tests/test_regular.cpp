#include <doctest.h>

TEST_SUITE("regular") {
TEST_CASE("placeholder") { CHECK(true); }
}
