#include <gtest/gtest.h>

#include "reference_hasse.hpp"
#include "root_oracle.hpp"
#include "satake/satake.hpp"
#include "support.hpp"

using namespace satake;
using satake::testing::ex1;
using satake::testing::nodes;

namespace {

// Bourbaki indices (1-based) to a node set of the standard diagram.
NodeSet alpha(std::initializer_list<int> is) {
  NodeSet s;
  for (int i : is) s.insert(i - 1);
  return s;
}

std::vector<NodeSet> sorted(std::vector<NodeSet> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

}  // namespace

TEST(Families, B3Example) {
  const DynkinDiagram b3 = standard_diagram({Series::B, 3});
  EXPECT_EQ(family_Ftilde(b3, b3.all()).members,
            sorted({alpha({1}), alpha({2}), alpha({3}), alpha({2, 3}), alpha({1, 2, 3})}));
  const Family f = family_F(b3, b3.all());
  EXPECT_EQ(f.members, sorted({alpha({3}), alpha({1}), alpha({2, 3}), alpha({1, 2, 3})}));
  std::vector<NodeSet> fc = f.members;
  std::erase(fc, alpha({1}));
  EXPECT_EQ(family_Fcirc(b3, b3.all()).members, fc);
  EXPECT_EQ(family_Fstar(b3, b3.all()).members, sorted({alpha({2, 3}), alpha({1, 2, 3})}));
}

TEST(Families, E6Example) {
  const DynkinDiagram e6 = standard_diagram({Series::E6, 6});
  const Family f = family_F(e6, e6.all());
  EXPECT_EQ(f.members, sorted({alpha({1, 3, 4, 5, 6}), e6.all()}));
  const Family ft = family_Ftilde(e6, e6.all());
  EXPECT_TRUE(ft.contains(alpha({3, 4, 5})));
  EXPECT_FALSE(f.contains(alpha({3, 4, 5})));
}

TEST(Families, SingleNodeComponent) {
  const DynkinDiagram a1 = standard_diagram({Series::A, 1});
  EXPECT_EQ(family_Ftilde(a1, a1.all()).members, std::vector<NodeSet>{a1.all()});
  EXPECT_EQ(family_F(a1, a1.all()).members, std::vector<NodeSet>{a1.all()});
  EXPECT_EQ(family_Fstar(a1, a1.all()).members, std::vector<NodeSet>{a1.all()});
}

TEST(Hasse, Examples) {
  const DynkinDiagram b3 = standard_diagram({Series::B, 3});
  const HasseDiagram h = hasse(family_F(b3, b3.all()));
  auto at = [&](NodeSet s) { return static_cast<int>(std::find(h.nodes.begin(), h.nodes.end(), s) - h.nodes.begin()); };
  std::set<std::pair<int, int>> covers(h.covers.begin(), h.covers.end());
  EXPECT_EQ(covers, (std::set<std::pair<int, int>>{{at(alpha({3})), at(alpha({2, 3}))},
                                                   {at(alpha({2, 3})), at(b3.all())},
                                                   {at(alpha({1})), at(b3.all())}}));
  const std::vector<NodeSet> one{alpha({1})};
  const HasseDiagram single = hasse(std::span<const NodeSet>(one));
  EXPECT_EQ(single.nodes.size(), 1U);
  EXPECT_TRUE(single.covers.empty());

  const DynkinDiagram d4 = standard_diagram({Series::D, 4});
  const HasseDiagram hd = hasse(family_F(d4, d4.all()));
  ASSERT_EQ(hd.nodes.size(), 4U);
  EXPECT_EQ(hd.covers.size(), 3U);
  for (auto [lo, hi] : hd.covers) {
    EXPECT_EQ(hd.nodes[lo].size(), 1);
    EXPECT_EQ(hd.nodes[hi], d4.all());
  }
}

TEST(Hasse, CoversHaveNoShortcuts) {
  for (ComponentType t : all_types(7)) {
    const DynkinDiagram d = standard_diagram(t);
    const HasseDiagram h = hasse(family_Ftilde(d, d.all()));
    for (auto [a, b] : h.covers) {
      EXPECT_NE(a, b);
      EXPECT_TRUE(h.nodes[a].subset_of(h.nodes[b]));
      for (NodeSet mid : h.nodes)
        EXPECT_FALSE(mid != h.nodes[a] && mid != h.nodes[b] && h.nodes[a].subset_of(mid) && mid.subset_of(h.nodes[b]));
    }
  }
}

TEST(ReferenceHasse, MatchesTranscription) {
  for (const auto& row : satake::testing::reference_hasse()) {
    const DynkinDiagram d = standard_diagram(row.type);
    const MarkedHasse m = figure_hasse(d, d.all());
    EXPECT_TRUE(satake::testing::isomorphic(row, satake::testing::computed_nodes(d, m), m.hasse.covers))
        << row.type.name();
  }
}

TEST(ReferenceHasse, RestoredA1Members) {
  // Every ι-fixed simple root is an A1 member of F̃; those outside F are the omitted ones.
  for (const auto& row : satake::testing::reference_hasse()) {
    const DynkinDiagram d = standard_diagram(row.type);
    const auto w0 = satake::testing::minus_w0(row.type);
    int fixed = 0;
    for (int i = 0; i < d.size(); ++i) fixed += w0[i] == i;
    const Family ft = family_Ftilde(d, d.all());
    const Family f = family_F(d, d.all());
    int restored = 0;
    for (NodeSet psi : ft.members)
      if (psi.size() == 1 && !f.contains(psi) && psi != d.all()) ++restored;
    EXPECT_EQ(restored, fixed - row.drawn_a1()) << row.type.name();
  }
}

TEST(Families, InclusionsAndPromotion) {
  for (ComponentType t : all_types(8)) {
    const DynkinDiagram d = standard_diagram(t);
    const Family ft = family_Ftilde(d, d.all());
    const Family f = family_F(d, d.all());
    const Family fc = family_Fcirc(d, d.all());
    const Family fs = family_Fstar(d, d.all());
    const Permutation iota = opposition_involution(d);
    for (NodeSet psi : ft.members) {
      EXPECT_TRUE(d.graph().connected(psi));
      EXPECT_TRUE(iota.fixes(psi));
    }
    for (NodeSet psi : f.members) EXPECT_TRUE(ft.contains(psi)) << t.name();
    for (NodeSet psi : fc.members) EXPECT_TRUE(f.contains(psi)) << t.name();
    for (NodeSet psi : fs.members) EXPECT_TRUE(ft.contains(psi)) << t.name();
    for (NodeSet lo : f.members)
      for (NodeSet hi : ft.members)
        if (lo.subset_of(hi) && lo != hi) {
          EXPECT_TRUE(f.contains(hi)) << t.name();
        }
    EXPECT_TRUE(f.contains(d.all()));
  }
}

TEST(FamilyB, Ex1Examples) {
  const TwoLevelIndex idx = ex1();
  const auto& d = idx.diagram;
  auto rows = family_B(idx, nodes(d, {"a2", "b3"}));
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0].members, (std::vector<NodeSet>{nodes(d, {"a2", "a3"}), nodes(d, {"a1", "a2", "a3"})}));
  EXPECT_EQ(rows[1].members,
            (std::vector<NodeSet>{nodes(d, {"b3"}), nodes(d, {"b2", "b3"}), nodes(d, {"b1", "b2", "b3"})}));
  for (const Family& f : family_B(idx, NodeSet{})) EXPECT_TRUE(f.members.empty());
  rows = family_B(idx, nodes(d, {"a1", "b3"}));
  EXPECT_EQ(rows[0].members, (std::vector<NodeSet>{nodes(d, {"a1"}), nodes(d, {"a1", "a2", "a3"})}));
  const auto star = family_Bstar(idx, nodes(d, {"a1", "b3"}));
  EXPECT_EQ(star[0].members, (std::vector<NodeSet>{nodes(d, {"a1", "a2", "a3"})}));
}

TEST(ExceptionalFactors, Examples) {
  const TwoLevelIndex idx = ex1();
  const auto& d = idx.diagram;
  EXPECT_EQ(exceptional_factors(idx, nodes(d, {"a1", "b3"})), std::vector<NodeSet>{nodes(d, {"a1", "a2", "a3"})});
  EXPECT_TRUE(exceptional_factors(idx, nodes(d, {"a2", "b3"})).empty());
  const TwoLevelIndex a3 = satake::testing::split({Series::A, 3});
  EXPECT_TRUE(exceptional_factors(a3, NodeSet::single(0)).empty());
}

TEST(Dot, FamiliesAndBoundary) {
  const DynkinDiagram g2 = standard_diagram({Series::G2, 2});
  const std::string dot = emit_dot(hasse(family_F(g2, g2.all())), g2);
  EXPECT_EQ(dot,
            "digraph hasse {\n  rankdir=LR;\n  \"n0\" [label=\"A1:a1\"];\n  \"n1\" [label=\"A1:a2\"];\n"
            "  \"n2\" [label=\"G2:a1,a2\"];\n  \"n0\" -> \"n2\";\n  \"n1\" -> \"n2\";\n}\n");
  EXPECT_EQ(emit_dot(HasseDiagram{}, g2), "digraph hasse {\n}\n");
  const MarkedHasse e6 = figure_hasse(standard_diagram({Series::E6, 6}), NodeSet::range(6));
  const std::string marked = emit_dot(e6.hasse, standard_diagram({Series::E6, 6}), "hasse", e6.hollow);
  EXPECT_NE(marked.find("A3:a3,a4,a5 ∘\", style=dashed"), std::string::npos);
  const TwoLevelIndex idx = ex1();
  const std::string b = emit_dot(boundary_components(idx, nodes(idx.diagram, {"a2", "b3"})), idx.diagram);
  EXPECT_EQ(b.rfind("digraph boundary {", 0), 0U);
  EXPECT_NE(b.find("\"∅\""), std::string::npos);
}
