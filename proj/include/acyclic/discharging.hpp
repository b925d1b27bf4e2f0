#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "acyclic/embedding.hpp"
#include "acyclic/errors.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/rational.hpp"
#include "acyclic/scanner.hpp"

namespace acyclic {

// Charges: 2d(v) - 6 on each vertex, d(f) - 6 on each face. By Euler's formula
// the total over a connected plane graph is -12. The rules below move charge
// from vertices to their incident faces (corners).

enum class Rule { None, R1, R2a, R2b, R3_1, R3_2, R3_3Adjacent, R3_3Split };

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::None: return "none";
    case Rule::R1: return "R1";
    case Rule::R2a: return "R2a";
    case Rule::R2b: return "R2b";
    case Rule::R3_1: return "R3.1";
    case Rule::R3_2: return "R3.2";
    case Rule::R3_3Adjacent: return "R3.3-adjacent";
    case Rule::R3_3Split: return "R3.3-split";
  }
  return "?";
}

struct RuleApplicability {
  Rule rule = Rule::None;
  /// Set when the rule's degree precondition fails, which only happens in the
  /// presence of configuration A3 or A4.
  bool violation = false;
  std::vector<NeighborDegree> neighbors;
};

struct Transfer {
  VertexId vertex = kNoVertex;
  FaceId face = -1;
  Rational amount;
  Rule rule = Rule::None;
};

enum class Phase { Initial, Discharged };

struct ChargeLedger {
  Phase phase = Phase::Initial;
  std::vector<Rational> vertex_charge;
  std::vector<Rational> face_charge;
  std::vector<Transfer> transfers;

  Rational total() const {
    Rational s;
    for (const auto& r : vertex_charge) s += r;
    for (const auto& r : face_charge) s += r;
    return s;
  }
};

/// True when the denominator divides 420 = lcm(2, 3, 4, 5, 6, 7, 15), the
/// only denominators the rules can produce for degrees up to 7.
inline bool denominator_divides_420(const Rational& r) { return 420 % r.den() == 0; }

inline ChargeLedger initial_charges(const Graph& g, const FaceSet& faces) {
  ChargeLedger l;
  l.vertex_charge.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) l.vertex_charge.emplace_back(2 * g.degree(v) - 6);
  l.face_charge.reserve(faces.size());
  for (const Face& f : faces.faces) l.face_charge.emplace_back(f.length - 6);
  return l;
}

namespace detail {

inline bool corner_has(const FaceSet& faces, VertexId v, int i, VertexId x) {
  const auto& ring = faces.rotation.order[v];
  const int d = static_cast<int>(ring.size());
  return ring[i] == x || ring[(i + d - 1) % d] == x;
}

inline bool shares_corner(const FaceSet& faces, VertexId v, VertexId a, VertexId b) {
  const int d = static_cast<int>(faces.rotation.order[v].size());
  for (int i = 0; i < d; ++i)
    if (corner_has(faces, v, i, a) && corner_has(faces, v, i, b)) return true;
  return false;
}

}  // namespace detail

/// Which rule v follows. 6+-vertices use R1; 4-vertices R2 (R2a when every
/// neighbor is 8+, R2b when exactly one is 7-); 5-vertices R3.1/R3.2/R3.3 by
/// their sorted neighbor degrees. R3.3 splits on whether vv1 and vv2 bound a
/// common face.
inline RuleApplicability classify_rule(const Graph& g, const FaceSet& faces, VertexId v) {
  RuleApplicability r;
  const int d = g.degree(v);
  for (VertexId w : g.neighbors(v)) r.neighbors.push_back({w, g.degree(w)});
  std::sort(r.neighbors.begin(), r.neighbors.end());
  if (d <= 3) return r;
  if (d >= 6) {
    r.rule = Rule::R1;
    return r;
  }
  const auto& nb = r.neighbors;
  if (d == 4) {
    if (nb[0].degree >= 8) {
      r.rule = Rule::R2a;
    } else {
      r.rule = Rule::R2b;
      r.violation = nb[1].degree <= 7;
    }
    return r;
  }
  // d == 5
  if (nb[0].degree >= 7) {
    r.rule = Rule::R3_1;
  } else if (nb[1].degree >= 8) {
    r.rule = Rule::R3_2;
  } else if (nb[1].degree <= 7) {
    if (nb[2].degree <= 8) {
      r.rule = Rule::R3_3Split;
      r.violation = true;
    } else {
      r.rule = detail::shares_corner(faces, v, nb[0].vertex, nb[1].vertex) ? Rule::R3_3Adjacent
                                                                             : Rule::R3_3Split;
    }
  }
  return r;
}

/// Charge sent by v to each of its corners. Throws ConfigurationPresent when
/// v's rule precondition fails.
inline std::vector<Transfer> vertex_transfers(const Graph& g, const FaceSet& faces, VertexId v) {
  const RuleApplicability app = classify_rule(g, faces, v);
  if (app.violation) {
    throw ConfigurationPresent(v, "vertex " + std::to_string(v) + " violates the precondition of rule " +
                                      to_string(app.rule));
  }
  std::vector<Transfer> out;
  if (app.rule == Rule::None) return out;
  const int d = g.degree(v);
  const VertexId v1 = app.neighbors[0].vertex;
  const VertexId v2 = app.neighbors[1].vertex;
  for (int i = 0; i < d; ++i) {
    const bool has1 = detail::corner_has(faces, v, i, v1);
    const bool has2 = detail::corner_has(faces, v, i, v2);
    Rational amount;
    switch (app.rule) {
      case Rule::R1: amount = Rational(2 * d - 6, d); break;
      case Rule::R2a: amount = Rational(1, 2); break;
      case Rule::R2b: amount = has1 ? Rational(4, 5) : Rational(1, 5); break;
      case Rule::R3_1: amount = Rational(4, 5); break;
      case Rule::R3_2: amount = has1 ? Rational(5, 4) : Rational(1, 2); break;
      case Rule::R3_3Adjacent:
        amount = has1 && has2 ? Rational(1) : (has1 || has2) ? Rational(5, 6) : Rational(2, 3);
        break;
      case Rule::R3_3Split: amount = (has1 || has2) ? Rational(13, 15) : Rational(8, 15); break;
      case Rule::None: break;
    }
    out.push_back({v, faces.corner_face(v, i), amount, app.rule});
  }
  return out;
}

/// Runs every rule once. Each transfer debits a vertex and credits a face by the
/// same amount, so the total is preserved exactly.
inline ChargeLedger apply_discharging(const Graph& g, const FaceSet& faces, const ChargeLedger& initial) {
  if (initial.phase != Phase::Initial) throw ArgumentError("ledger is already discharged");
  ChargeLedger l = initial;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Transfer& t : vertex_transfers(g, faces, v)) {
      l.vertex_charge[t.vertex] -= t.amount;
      l.face_charge[t.face] += t.amount;
      l.transfers.push_back(std::move(t));
    }
  }
  l.phase = Phase::Discharged;
  return l;
}

struct NegativeCharge {
  std::string element;
  Rational charge;
};

struct AuditReport {
  enum class Outcome { ConfigurationFound, Charges };

  Outcome outcome = Outcome::ConfigurationFound;
  std::optional<Configuration> configuration;
  Rational initial_total;
  std::optional<ChargeLedger> discharged;
  std::vector<NegativeCharge> negatives;
};

/// Audits an embedded triangulation. On a planar input the scanner always finds
/// a configuration; with `scan_configurations` off the rules run regardless and
/// every element left with negative charge is listed.
inline AuditReport audit_triangulation(const Graph& g, const RotationSystem& rot, bool scan_configurations = true) {
  TriangulationWitness w = witness_triangulation(g, rot);
  if (!w.all_triangles) throw ArgumentError("audit needs a triangulation (every face of length 3)");
  AuditReport report;
  const ChargeLedger initial = initial_charges(g, w.faces);
  report.initial_total = initial.total();
  if (scan_configurations) {
    try {
      report.configuration = find_configuration(g);
      report.outcome = AuditReport::Outcome::ConfigurationFound;
      return report;
    } catch (const NotPlanarEvidence&) {
    }
  }
  report.outcome = AuditReport::Outcome::Charges;
  report.discharged = apply_discharging(g, w.faces, initial);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (report.discharged->vertex_charge[v] < 0)
      report.negatives.push_back({"vertex#" + std::to_string(v), report.discharged->vertex_charge[v]});
  }
  for (FaceId f = 0; f < w.faces.size(); ++f) {
    if (report.discharged->face_charge[f] < 0)
      report.negatives.push_back({"face#" + std::to_string(f), report.discharged->face_charge[f]});
  }
  return report;
}

}  // namespace acyclic
