#pragma once

#include <vector>

#include "ccn/families.hpp"

namespace fixtures {

// Published example colourings transcribed into the fixed vertex layout
// (rim 0..n-1, outer/pendant vertices n..2n-1, centre last). theta is the
// stated class-size vector, descending. claimWitness records whether the
// colouring realizes the claimed (cn, cnc) pair for that family and n; the
// blossom n=9 colouring does not (largest class 5, claimed cn 4).
struct ColouringFixture {
    const char* name;
    ccn::FamilySpec spec;
    std::vector<int> colours;
    std::vector<long long> theta;
    bool claimWitness;
};

inline const std::vector<ColouringFixture>& referenceColourings()
{
    using ccn::Family;
    static const std::vector<ColouringFixture> fixtures = {
        {"W11", {Family::Wheel, 10},
         {1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 3},
         {5, 5, 1}, true},
        {"W10", {Family::Wheel, 9},
         {1, 2, 1, 2, 1, 2, 1, 2, 3, 4},
         {4, 4, 1, 1}, true},
        {"DW9", {Family::DoubleWheel, 9},
         {1, 2, 1, 2, 1, 2, 1, 2, 3, 1, 2, 1, 2, 1, 2, 1, 2, 3, 4},
         {8, 8, 2, 1}, true},
        {"H8", {Family::Helm, 8},
         {2, 3, 2, 3, 2, 3, 2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {9, 4, 4}, true},
        {"H9", {Family::Helm, 9},
         {2, 3, 2, 3, 2, 3, 2, 3, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {10, 4, 4, 1}, true},
        {"CH8", {Family::ClosedHelm, 8},
         {1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 3},
         {8, 8, 1}, true},
        {"CH9", {Family::ClosedHelm, 9},
         {1, 2, 1, 2, 1, 2, 1, 2, 3, 3, 1, 2, 1, 2, 1, 2, 1, 2, 4},
         {8, 8, 2, 1}, true},
        {"F8", {Family::Flower, 8},
         {2, 3, 2, 3, 2, 3, 2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 4},
         {8, 4, 4, 1}, true},
        {"F9", {Family::Flower, 9},
         {2, 3, 2, 3, 2, 3, 2, 3, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 5},
         {9, 4, 4, 1, 1}, true},
        {"Dj8", {Family::Djembe, 8},
         {1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 2, 1, 2, 1, 2, 1, 3},
         {8, 8, 1}, true},
        {"Dj9", {Family::Djembe, 9},
         {1, 2, 1, 2, 1, 2, 1, 2, 3, 3, 1, 2, 1, 2, 1, 2, 1, 2, 4},
         {8, 8, 2, 1}, true},
        {"SF8", {Family::Sunflower, 8},
         {2, 3, 2, 3, 2, 3, 2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {9, 4, 4}, true},
        {"SF9", {Family::Sunflower, 9},
         {2, 3, 2, 3, 2, 3, 2, 3, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
         {10, 4, 4, 1}, true},
        {"CSF9", {Family::ClosedSunflower, 9},
         {3, 4, 3, 4, 3, 4, 3, 4, 1, 1, 2, 1, 2, 1, 2, 1, 2, 4, 2},
         {5, 5, 5, 4}, true},
        {"CSF10", {Family::ClosedSunflower, 10},
         {3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1},
         {6, 5, 5, 5}, true},
        {"A9", {Family::Antiprism, 9},
         {3, 4, 3, 4, 3, 4, 3, 4, 1, 4, 1, 2, 1, 2, 1, 2, 1, 2},
         {5, 5, 4, 4}, true},
        {"A10", {Family::Antiprism, 10},
         {3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2},
         {5, 5, 5, 5}, true},
        {"Bl9", {Family::Blossom, 9},
         {3, 4, 3, 4, 3, 4, 3, 4, 1, 1, 2, 1, 2, 1, 2, 1, 2, 4, 5},
         {5, 5, 4, 4, 1}, false},
        {"Bl10", {Family::Blossom, 10},
         {3, 4, 3, 4, 3, 4, 3, 4, 3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 5},
         {5, 5, 5, 5, 1}, true},
    };
    return fixtures;
}

}  // namespace fixtures
