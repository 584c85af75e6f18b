#include "hermann/triad.hpp"

namespace hermann {

namespace {

struct RootSpec {
  int c1;
  int c2;
  int mV;
  int mH;
};

SymmetricTriad rank_two(std::string id, std::string name, int ambient,
                        std::initializer_list<RootSpec> roots) {
  SymmetricTriad t;
  t.id = std::move(id);
  t.name = std::move(name);
  t.rank = 2;
  for (const auto& r : roots) t.roots.push_back({{r.c1, r.c2}, r.mV, r.mH});
  t.centralizer_dim = 0;
  t.ambient_dim = ambient;
  t.cohomogeneity_equals_rank = true;
  return t;
}

std::vector<SymmetricTriad> build_catalog() {
  std::vector<SymmetricTriad> c;

  // Equal vertical and horizontal multiplicities on every root.
  c.push_back(rank_two("su6-sp3-so6", "SO(6) on SU(6)/Sp(3)", 14,
                       {{1, 0, 2, 2}, {0, 1, 2, 2}, {1, 1, 2, 2}}));
  c.push_back(rank_two("so5xso5-so5-equal", "SO(2)^2×SO(3)^2 on (SO(5)×SO(5))/SO(5)", 10,
                       {{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}}));
  c.push_back(rank_two("sp2xsp2-sp2-equal", "SU(2)^2·SO(2)^2 on (Sp(2)×Sp(2))/Sp(2)", 10,
                       {{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}}));
  c.push_back(rank_two("e6-f4-sp4", "Sp(4) on E6/F4", 26,
                       {{1, 0, 4, 4}, {0, 1, 4, 4}, {1, 1, 4, 4}}));
  c.push_back(rank_two("g2xg2-g2-equal", "SU(2)^4 on (G2×G2)/G2", 14,
                       {{1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}, {3, 1, 1, 1}, {3, 2, 1, 1}}));

  // Duals of non-compact Hermann actions: vertical and horizontal roots disjoint.
  c.push_back(rank_two("su3-so3-dual", "(1) SO0(1,2)* on SU(3)/SO(3)", 5,
                       {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 1}}));
  c.push_back(rank_two("su6-sp3-dual", "(2) Sp(1,2)* on SU(6)/Sp(3)", 14,
                       {{1, 0, 4, 0}, {0, 1, 0, 4}, {1, 1, 0, 4}}));
  c.push_back(rank_two("so10-u5-dual", "(3) U(2,3)* on SO(10)/U(5)", 20,
                       {{1, 0, 4, 0}, {2, 0, 1, 0}, {2, 2, 1, 0}, {0, 1, 0, 4}, {1, 1, 0, 4}, {2, 1, 0, 4}}));
  c.push_back(rank_two("so5xso5-so5-dual", "(4) SO0(2,3)* on (SO(5)×SO(5))/SO(5)", 10,
                       {{1, 0, 2, 0}, {0, 1, 0, 2}, {1, 1, 0, 2}, {2, 1, 0, 2}}));
  c.push_back(rank_two("sp2-u2-dual", "(5) U(1,1)* on Sp(2)/U(2)", 6,
                       {{0, 1, 1, 0}, {2, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 0, 1}}));
  c.push_back(rank_two("sp2xsp2-sp2-dual-sp2r", "(6) Sp(2,R)* on (Sp(2)×Sp(2))/Sp(2)", 10,
                       {{1, 0, 2, 0}, {0, 1, 0, 2}, {1, 1, 0, 2}, {2, 1, 0, 2}}));
  c.push_back(rank_two("sp2xsp2-sp2-dual-sp11", "(7) Sp(1,1)* on (Sp(2)×Sp(2))/Sp(2)", 10,
                       {{0, 1, 2, 0}, {2, 1, 2, 0}, {1, 0, 0, 2}, {1, 1, 0, 2}}));
  c.push_back(rank_two("e6-spin10u1-dual", "(8) (SO*(10)·U(1))* on E6/Spin(10)·U(1)", 32,
                       {{1, 0, 8, 0}, {2, 0, 1, 0}, {2, 2, 1, 0}, {0, 1, 0, 6}, {1, 1, 0, 9}, {2, 1, 0, 5}}));
  c.push_back(rank_two("e6-f4-dual", "(9) (F4^-20)* on E6/F4", 26,
                       {{1, 0, 8, 0}, {0, 1, 0, 8}, {1, 1, 0, 8}}));
  c.push_back(rank_two("g2-so4-dual", "(10) (SL(2,R)×SL(2,R))* on G2/SO(4)", 8,
                       {{1, 0, 1, 0}, {3, 2, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 1}, {2, 1, 0, 1}, {3, 1, 0, 1}}));
  c.push_back(rank_two("g2xg2-g2-dual", "(11) (G2^2)* on (G2×G2)/G2", 14,
                       {{1, 0, 2, 0}, {3, 2, 2, 0}, {0, 1, 0, 2}, {1, 1, 0, 2}, {2, 1, 0, 2}, {3, 1, 0, 2}}));
  return c;
}

}  // namespace

const std::vector<SymmetricTriad>& catalog() {
  static const std::vector<SymmetricTriad> entries = build_catalog();
  return entries;
}

}  // namespace hermann
