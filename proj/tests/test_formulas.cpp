#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ccn/formulas.hpp"

using ccn::Family;

namespace {

void expect(Family f, int n, long long cn, long long cnc)
{
    auto r = ccn::claimedValues(f, n);
    CAPTURE(ccn::familyName(f));
    CAPTURE(n);
    REQUIRE(r.cn.has_value());
    REQUIRE(r.cnc.has_value());
    CHECK(*r.cn == cn);
    CHECK(*r.cnc == cnc);
}

}  // namespace

TEST_CASE("claimed values, both parities of every family")
{
    expect(Family::Path, 5, 3, 6);
    expect(Family::Path, 8, 4, 16);
    expect(Family::Path, 2, 1, 1);
    expect(Family::Cycle, 7, 3, 9);
    expect(Family::Cycle, 10, 5, 25);
    expect(Family::Cycle, 3, 1, 1);
    expect(Family::Wheel, 4, 2, 4);
    expect(Family::Wheel, 9, 4, 16);
    expect(Family::DoubleWheel, 5, 4, 32);
    expect(Family::DoubleWheel, 6, 6, 36);
    expect(Family::Helm, 4, 5, 20);
    expect(Family::Helm, 7, 8, 72);
    expect(Family::ClosedHelm, 5, 4, 32);
    expect(Family::ClosedHelm, 6, 6, 36);
    expect(Family::Flower, 6, 6, 54);
    expect(Family::Flower, 7, 7, 63);
    expect(Family::Djembe, 8, 8, 64);
    expect(Family::Djembe, 9, 8, 128);
    expect(Family::Sunflower, 5, 6, 24);
    expect(Family::Sunflower, 8, 9, 144);
    expect(Family::ClosedSunflower, 5, 3, 54);
    expect(Family::ClosedSunflower, 6, 4, 108);
    expect(Family::Antiprism, 6, 3, 81);
    expect(Family::Antiprism, 7, 4, 144);
    expect(Family::Antiprism, 8, 4, 256);
    expect(Family::Blossom, 9, 4, 400);
    expect(Family::Blossom, 10, 5, 625);
}

TEST_CASE("every tabulated division is exact for n up to 30")
{
    for (int f = 0; f <= static_cast<int>(Family::Blossom); ++f) {
        auto fam = static_cast<Family>(f);
        for (int n = ccn::claimMinimumN(fam); n <= 30; ++n) {
            auto r = ccn::claimedValues(fam, n);  // throws on inexact division
            CAPTURE(ccn::familyName(fam));
            CAPTURE(n);
            REQUIRE(r.cn.has_value());
            REQUIRE(r.cnc.has_value());
            CHECK(*r.cn >= 1);
            CHECK(*r.cnc >= 1);
        }
    }
}

TEST_CASE("claim sources name the family and the parity branch")
{
    for (int f = 0; f <= static_cast<int>(Family::Blossom); ++f) {
        auto fam = static_cast<Family>(f);
        for (int n : {claimMinimumN(fam), claimMinimumN(fam) + 1}) {
            auto r = ccn::claimedValues(fam, n);
            CHECK(r.source.starts_with(ccn::familyName(fam)));
            const std::string parity = n % 2 == 0 ? "even" : "odd";
            CHECK(r.source.find(parity) != std::string::npos);
        }
    }
}

TEST_CASE("parameters without a claim are rejected")
{
    CHECK(ccn::claimMinimumN(Family::Path) == 2);
    CHECK(ccn::claimMinimumN(Family::Blossom) == 3);
    CHECK_THROWS_AS(ccn::claimedValues(Family::Path, 1),
                    ccn::UnsupportedParameterError);
    CHECK_THROWS_AS(ccn::claimedValues(Family::Cycle, 2),
                    ccn::UnsupportedParameterError);
    CHECK_THROWS_AS(ccn::claimedValues(Family::Helm, 0),
                    ccn::UnsupportedParameterError);
}
