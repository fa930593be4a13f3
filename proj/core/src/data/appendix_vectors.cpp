#include "data.hpp"

namespace whframes::data {

const std::vector<AppendixVector>& appendix_table() {
  static const std::vector<AppendixVector> table = {
    {{ // 1
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1}}},
    {{ // 2
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1}}},
    {{ // 3
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{16, -12, -8, 12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2}}},
    {{ // 4
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-16, 12, 8, -12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2}}},
    {{ // 5
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1}}},
    {{ // 6
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1}}},
    {{ // 7
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{8, -12, 8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2}}},
    {{ // 8
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-8, 12, -8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2}}},
    {{ // 9
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1}}},
    {{ // 10
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1}}},
    {{ // 11
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{8, 0, -16, 12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2}}},
    {{ // 12
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-8, 0, 16, -12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2}}},
    {{ // 13
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1}}},
    {{ // 14
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1}}},
    {{ // 15
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{8, 0, -16, 12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2}}},
    {{ // 16
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-8, 0, 16, -12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2}}},
    {{ // 17
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1}}},
    {{ // 18
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1}}},
    {{ // 19
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{8, -12, 8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2}}},
    {{ // 20
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-8, 12, -8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2}}},
    {{ // 21
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1},
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1}}},
    {{ // 22
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1}}},
    {{ // 23
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{16, -12, -8, 12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2}}},
    {{ // 24
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-16, 12, 8, -12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2}}},
    {{ // 25
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 4, -12, 4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2}}},
    {{ // 26
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2},
        {{-16, 12, 8, -12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1}}},
    {{ // 27
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2},
        {{16, -12, -8, 12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1}}},
    {{ // 28
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -4, -12, 8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 4, -12, 4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2}}},
    {{ // 29
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2},
        {{16, -12, -8, 12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, 1}}},
    {{ // 30
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, -4, 12, -4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2}}},
    {{ // 31
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, -4, 12, -4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2}}},
    {{ // 32
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 4, 12, -8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2},
        {{-16, 12, 8, -12, 0, 0}, {0, 1, -1, 1, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, 1}}},
    {{ // 33
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{-12, 8, 0, -4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2}}},
    {{ // 34
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2},
        {{8, 0, -16, 12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1}}},
    {{ // 35
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{-12, 8, 0, -4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2}}},
    {{ // 36
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{12, -8, 0, 4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2},
        {{-8, 0, 16, -12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1}}},
    {{ // 37
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{-12, 4, 12, -8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2}}},
    {{ // 38
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2},
        {{-8, 12, -8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1}}},
    {{ // 39
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2},
        {{8, -12, 8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1}}},
    {{ // 40
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, -4, 12, -4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{-12, 4, 12, -8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2}}},
    {{ // 41
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2},
        {{8, -12, 8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, 1}}},
    {{ // 42
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {2, -1, -1, 1, 0, 0}, 2},
        {{-4, 12, -4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{12, -4, -12, 8, 0, 0}, {-1, 1, -1, 0, 0, 0}, 2}}},
    {{ // 43
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2},
        {{4, -12, 4, 0, 0, 0}, {1, -1, -1, 2, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{8, -12, -4, 12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{12, -4, -12, 8, 0, 0}, {1, -1, 1, 0, 0, 0}, 2}}},
    {{ // 44
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{0, 4, -12, 4, 0, 0}, {-2, 1, 1, -1, 0, 0}, 2},
        {{-8, 12, -8, 0, 0, 0}, {-1, 1, 1, -2, 0, 0}, 1},
        {{-12, 16, 0, -8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-8, 12, 4, -12, 0, 0}, {0, -1, 1, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, 1}}},
    {{ // 45
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{12, -8, 0, 4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2}}},
    {{ // 46
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {-1, 0, 2, -1, 0, 0}, 2},
        {{-8, 0, 16, -12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {1, 0, -2, 1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, 1}}},
    {{ // 47
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1},
        {{4, 0, -8, 12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{12, -8, 0, 4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2}}},
    {{ // 48
        {{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, 1},
        {{-12, 8, 0, -4, 0, 0}, {1, 0, -2, 1, 0, 0}, 2},
        {{8, 0, -16, 12, 0, 0}, {1, -2, 0, 1, 0, 0}, 1},
        {{12, -16, 0, 8, 0, 0}, {-1, 0, 2, -1, 0, 0}, 1},
        {{-4, 0, 8, -12, 0, 0}, {-1, 2, 0, -1, 0, 0}, 2},
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, 1}}},
  };
  return table;
}

}  // namespace whframes::data
