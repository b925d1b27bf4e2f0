// Runs the discharging rules on the icosahedron with a vertex stacked into
// every face. Degrees are 10 and 3, so only R1 fires; faces end at -1/5.

#include <iostream>

#include "acyclic.hpp"

int main() {
  using namespace acyclic;
  const Embedded ico = platonic(PlatonicSolid::Icosahedron);
  const Embedded g = kleetope(ico);

  const AuditReport scan = audit_triangulation(g.graph, g.rotation);
  std::cout << "configuration " << to_string(scan.configuration->kind) << " at vertex "
            << scan.configuration->vertex << "\n";

  const AuditReport charges = audit_triangulation(g.graph, g.rotation, /*scan_configurations=*/false);
  std::cout << "initial total " << charges.initial_total << ", final total " << charges.discharged->total() << "\n";
  std::cout << charges.negatives.size() << " elements end negative";
  if (!charges.negatives.empty())
    std::cout << ", e.g. " << charges.negatives.front().element << " = " << charges.negatives.front().charge;
  std::cout << "\n";
}
