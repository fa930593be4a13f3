#include "data.hpp"

namespace whframes::data {
namespace {

// One monomial i^ipow θ2^t2 θ1^t1 with a coefficient c0 + c1√3 + c2√7 + c3√21.
struct Term {
  int ipow, t2, t1;
  int c[4];
};

// v1..v6; the fiducial is θ3 (v1, ..., v6).
const std::vector<Term> kEntries[6] = {
    {
        {1, 2, 1, {0, 0, 336, -336}},
        {1, 2, 0, {-378, -42, -126, -42}},
        {1, 1, 1, {168, -112, 168, 0}},
        {1, 1, 0, {63, -21, 9, 3}},
        {1, 0, 1, {168, -56, 24, -24}},
        {1, 0, 0, {-6, 18, -6, 6}},
        {0, 2, 1, {0, 0, 336, 336}},
        {0, 2, 0, {378, -42, -126, 42}},
        {0, 1, 1, {-168, -112, 168, 0}},
        {0, 1, 0, {-63, -21, 9, -3}},
        {0, 0, 1, {-168, -56, 24, 24}},
        {0, 0, 0, {6, 18, -6, -6}},
    },
    {
        {1, 2, 1, {0, 0, 672, -672}},
        {1, 2, 0, {504, -168, 0, 0}},
        {1, 1, 1, {-420, 140, -84, 84}},
        {1, 1, 0, {126, -42, 0, 0}},
        {1, 0, 1, {336, -112, 48, -48}},
        {1, 0, 0, {36, -12, 12, -12}},
        {0, 2, 0, {-252, 252, 252, -84}},
        {0, 1, 1, {-84, 84, -252, 84}},
        {0, 1, 0, {0, 0, 18, -6}},
        {0, 0, 0, {24, -24, 0, 0}},
    },
    {
        {1, 0, 0, {0, -6, 6, 0}},
        {0, 0, 0, {-18, 12, -12, 6}},
    },
    {
        {1, 2, 1, {0, 0, 336, -336}},
        {1, 2, 0, {126, -42, -126, 126}},
        {1, 1, 1, {336, -112, 168, -168}},
        {1, 1, 0, {63, -21, 9, -9}},
        {1, 0, 1, {168, -56, 24, -24}},
        {1, 0, 0, {-54, 18, -6, 6}},
        {0, 2, 1, {0, 0, -1008, 336}},
        {0, 2, 0, {378, -378, -126, 42}},
        {0, 1, 1, {-168, 168, 0, 0}},
        {0, 1, 0, {-63, 63, 9, -3}},
        {0, 0, 1, {-168, 168, -72, 24}},
        {0, 0, 0, {6, -6, 18, -6}},
    },
    {
        {1, 2, 1, {0, 0, 672, 0}},
        {1, 2, 0, {252, -168, 0, 84}},
        {1, 1, 1, {84, 140, -84, -84}},
        {1, 1, 0, {0, -42, 0, 6}},
        {1, 0, 1, {0, -112, 48, 0}},
        {1, 0, 0, {-24, -12, 12, 0}},
        {0, 2, 1, {0, 0, 672, 0}},
        {0, 2, 0, {-252, -168, 0, -84}},
        {0, 1, 1, {-84, 140, -84, 84}},
        {0, 1, 0, {0, -42, 0, -6}},
        {0, 0, 1, {0, -112, 48, 0}},
        {0, 0, 0, {24, -12, 12, 0}},
    },
    {
        {1, 0, 0, {0, -6, 6, 0}},
        {0, 0, 0, {18, 0, 0, -6}},
    },
};

}  // namespace

std::vector<algebra::AlgebraicNumber> grassl_fiducial_entries() {
  const auto tower = algebra::grassl_tower();
  // basis index: √3 + 2√7 + 4i + 8θ1 + 16θ2 (3 powers) + 48θ3
  std::vector<algebra::AlgebraicNumber> out;
  for (const auto& terms : kEntries) {
    std::vector<algebra::Rational> coords(tower->total_degree());
    for (const auto& t : terms)
      for (int k = 0; k < 4; ++k) coords[static_cast<std::size_t>(k + 4 * t.ipow + 8 * t.t1 + 16 * t.t2 + 48)] += t.c[k];
    out.emplace_back(tower, std::move(coords));
  }
  return out;
}

}  // namespace whframes::data
