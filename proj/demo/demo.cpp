// Walks through the main operations on a few codes.
#include <iostream>

#include "chordflow/chordflow.hpp"

using namespace chordflow;

int main() {
  const TDiagram t = parse_sc_code(read_code("01'212", DiagramKind::SC));
  const Classification c = classify(t);
  std::cout << "01'212: " << c.surface.name() << ", " << c.cycles << " cycle(s)\n";
  std::cout << "  canonical " << format_code(canonical_code(t)) << "\n";
  std::cout << "  reverse   " << format_code(canonical_code(reverse_t(t))) << "\n";

  const CDiagram sn = parse_sn_code(read_code("1' 2 1 0 3 2 3", DiagramKind::SN));
  std::cout << "1' 2 1 0 3 2 3: " << classify(sn).surface.name() << "\n";

  const Catalog torus = enumerate(EnumerationQuery{QueryKind::SN, true, 1});
  std::cout << "SN-flows on the torus: " << torus.entries.size() << "\n";
  for (const CatalogEntry& e : torus.entries) std::cout << "  " << format_code(e.code) << "\n";

  const Catalog n3 = pair_catalog(enumerate(EnumerationQuery{QueryKind::SC, false, 3}));
  const ReverseStructure r = reverse_structure(n3);
  std::cout << "SC-flows on N3: " << n3.entries.size() << " (" << r.self_reverse << " self-reverse, "
            << r.pairs << " reverse pairs)\n";
}
