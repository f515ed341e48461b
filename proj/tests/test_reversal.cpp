#include <gtest/gtest.h>

#include "support.hpp"

using namespace chordflow;
using cft::sc;
using cft::sn;
using cft::text;

namespace {

TEST(ReverseC, FlipsPolarityOnly) {
  const CDiagram d = parse_sn_code(sn("0 1 2 1 2"));
  const CDiagram r = reverse_c(d);
  EXPECT_EQ(r.polarity(), Polarity::node_is_sink);
  EXPECT_EQ(r.arrangement(), d.arrangement());
  EXPECT_EQ(canonical_code(r), canonical_code(d));
  EXPECT_EQ(reverse_c(r), d);
}

TEST(ReverseT, Torus) {
  EXPECT_EQ(text(reverse_code(sc("0' 1' 1'"))), "0' 1' 1'");
}

TEST(ReverseT, Diagram6SelfReverse) {
  EXPECT_EQ(text(reverse_code(sc("0 1' 2 1 2"))), "0 1' 2 1 2");
  const TDiagram d = parse_sc_code(sc("01'212"));
  EXPECT_TRUE(is_isomorphic(d, reverse_t(d)));
}

TEST(ReverseT, NotOneCycled) {
  try {
    reverse_t(parse_sc_code(sc("0 1 1")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOneCycled);
  }
}

TEST(ReverseCode, NeedsScCode) {
  try {
    reverse_code(sn("0 1 2 1 2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindMismatch);
  }
}

TEST(ReverseT, CyclePositionsCoverNewSites) {
  const TDiagram d = parse_sc_code(sc("0 1' 2 1 2"));
  const RibbonComplex rc = to_ribbon(d);
  const auto positions = detail::cycle_positions(rc, boundary_cycles(rc).front());
  EXPECT_EQ(positions.size(), d.arrangement().size());
  for (std::size_t i = 0; i < positions.size(); ++i) EXPECT_EQ(positions[i].index, i);
}

TEST(PairCatalog, N3) {
  const Catalog c = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, false, 3}));
  const ReverseStructure r = reverse_structure(c);
  EXPECT_EQ(r.self_reverse, 6);
  EXPECT_EQ(r.pairs, 7);
}

TEST(PairCatalog, Torus) {
  const Catalog c = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, true, 1}));
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_TRUE(c.entries[0].self_reverse);
}

TEST(PairCatalog, Genus2IsMatching) {
  const Catalog c = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, true, 2}));
  const ReverseStructure r = reverse_structure(c);
  EXPECT_EQ(static_cast<std::size_t>(r.self_reverse + 2 * r.pairs), c.entries.size());
}

TEST(PairCatalog, ProjectivePlaneHasNoPartners) {
  const Catalog c = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, false, 1}));
  for (const CatalogEntry& e : c.entries) {
    EXPECT_FALSE(e.reverse_partner.has_value());
    EXPECT_FALSE(e.self_reverse);
  }
}

TEST(PairCatalog, PartnersAreInvolution) {
  for (const EnumerationQuery& q : cft::sc_one_cycled_queries()) {
    const Catalog c = pair_catalog(enumerate(q));
    std::map<DiagramCode, DiagramCode> partner;
    for (const CatalogEntry& e : c.entries) partner.emplace(e.code, *e.reverse_partner);
    for (const auto& [code, p] : partner) {
      ASSERT_TRUE(partner.contains(p));
      ASSERT_EQ(partner.at(p), code);
    }
  }
}

TEST(PairCatalog, OtherKindsUnchanged) {
  const Catalog c = enumerate(EnumerationQuery{QueryKind::SN, true, 1});
  EXPECT_EQ(pair_catalog(c), c);
}

}  // namespace
