#include "curvelab/report.hpp"

#include <json.hpp>
#include <sstream>

namespace curvelab {

using ordered_json = nlohmann::ordered_json;

std::string modulus_text(const Field& f) {
  if (f.s() == 1) return "x";
  std::ostringstream os;
  bool first = true;
  for (int i = f.s(); i >= 0; --i) {
    int c = f.modulus()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0 && c != 1) os << "*";
    if (i == 1) os << "x";
    else if (i > 1) os << "x^" << i;
  }
  return os.str();
}

namespace {

ordered_json branch_json(const BranchInfo& b) {
  ordered_json j;
  j["j1"] = b.j1;
  if (b.s)
    j["s"] = *b.s;
  else
    j["s"] = nullptr;
  j["linear"] = b.linear;
  j["tame"] = b.tame;
  j["rational"] = b.rational;
  return j;
}

ordered_json to_json(const CurveReport& r) {
  ordered_json j;
  j["field"] = {{"p", r.field->p()},
                {"s", r.field->s()},
                {"modulus", modulus_text(*r.field)}};
  j["curve"] = {{"degree", r.d}, {"text", r.curve_text}};
  j["counts"] = {{"Mq", r.counts.Mq},
                 {"MqS", r.counts.MqS},
                 {"Bq", r.Bq},
                 {"N1", r.N1}};
  ordered_json g;
  g["g_star"] = r.genus.g_star;
  if (r.genus.certified)
    g["g"] = r.genus.g_hi;
  else
    g["g"] = ordered_json::array({r.genus.g_lo, r.genus.g_hi});
  g["certified"] = r.genus.certified;
  j["genus"] = g;
  j["frobenius"] = {{"fnc", r.frob.fnc},
                    {"epsilon2", r.frob.epsilon2},
                    {"confidence", r.frob.confidence},
                    {"nu", r.frob.nu},
                    {"seed", r.frob.seed}};
  ordered_json sing = ordered_json::array();
  for (const auto& s : r.singular) {
    ordered_json sj;
    sj["point"] = format_point(s.sp.point);
    sj["level"] = s.sp.level;
    sj["mP"] = s.sp.mP;
    sj["delta"] = s.delta;
    sj["ordinary"] = s.ordinary;
    ordered_json brs = ordered_json::array();
    for (const auto& b : s.branches) brs.push_back(branch_json(b));
    sj["branches"] = brs;
    sing.push_back(sj);
  }
  j["singular"] = sing;
  ordered_json bounds;
  bounds["hv"] = r.bounds.hv;
  bounds["sv"] = r.bounds.sv ? ordered_json(*r.bounds.sv) : ordered_json(nullptr);
  bounds["main"] = r.bounds.main ? ordered_json(*r.bounds.main) : ordered_json(nullptr);
  bounds["hw_genus"] =
      r.bounds.hw_genus ? ordered_json(*r.bounds.hw_genus) : ordered_json(nullptr);
  bounds["hw_arith"] = r.bounds.hw_arith;
  j["bounds"] = bounds;
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json vj;
    vj["id"] = v.id;
    vj["holds"] = v.evaluated ? ordered_json(v.holds) : ordered_json(nullptr);
    vj["equality"] = v.equality;
    vj["notes"] = v.notes;
    vs.push_back(vj);
  }
  j["verdicts"] = vs;
  return j;
}

}  // namespace

std::string render_json(const CurveReport& r, bool pretty) {
  return pretty ? to_json(r).dump(2) : to_json(r).dump();
}

std::string render_text(const CurveReport& r) {
  std::ostringstream os;
  os << "curve: " << r.curve_text << "\n";
  os << "field: GF(" << r.field->q() << ") = GF(" << r.field->p() << "^"
     << r.field->s() << "), modulus " << modulus_text(*r.field) << "\n";
  os << "degree: " << r.d << "\n";
  os << "counts: Mq=" << r.counts.Mq << " MqS=" << r.counts.MqS
     << " Bq=" << r.Bq << " N1=" << r.N1 << "\n";
  os << "genus: g*=" << r.genus.g_star << " g=";
  if (r.genus.certified)
    os << r.genus.g_hi << " (certified)";
  else
    os << "[" << r.genus.g_lo << "," << r.genus.g_hi << "] (uncertified)";
  os << "\n";
  os << "frobenius: fnc=" << (r.frob.fnc ? "true" : "false")
     << " epsilon2=" << r.frob.epsilon2 << " (confidence " << r.frob.confidence
     << ") nu=" << r.frob.nu << " seed=" << r.frob.seed;
  if (r.frob.fnc && !r.frob.nu_is_p_power)
    os << " [warning: nu is not a p-power; sampled levels may contain only "
          "special points, retry with a larger kmax]";
  os << "\n";
  os << "singular points (" << r.singular.size() << " orbit"
     << (r.singular.size() == 1 ? "" : "s") << ", "
     << (r.singular_certified ? "certified complete" : "search truncated")
     << "):\n";
  for (const auto& s : r.singular) {
    os << "  " << format_point(s.sp.point) << " level=" << s.sp.level
       << " m=" << s.sp.mP << " delta=" << s.delta
       << (s.ordinary ? " ordinary" : "") << " branches:";
    for (const auto& b : s.branches) {
      os << " [j1=" << b.j1;
      if (b.s) os << " s=" << *b.s;
      os << (b.linear ? " linear" : "") << (b.tame ? " tame" : " wild")
         << (b.rational ? " rational" : "") << "]";
    }
    os << "\n";
  }
  os << "bounds: hv=" << r.bounds.hv;
  os << " sv=" << (r.bounds.sv ? std::to_string(*r.bounds.sv) : "-");
  os << " main=" << (r.bounds.main ? std::to_string(*r.bounds.main) : "-");
  os << " hw_genus="
     << (r.bounds.hw_genus ? std::to_string(*r.bounds.hw_genus) : "-");
  os << " hw_arith=" << r.bounds.hw_arith << "\n";
  os << "verdicts:\n";
  for (const auto& v : r.verdicts) {
    os << "  " << v.id << ": ";
    if (!v.evaluated)
      os << "not evaluated";
    else
      os << (v.holds ? "holds" : "FAILS") << (v.equality ? " (equality)" : "");
    if (!v.notes.empty()) os << " -- " << v.notes;
    os << "\n";
  }
  return os.str();
}

}  // namespace curvelab
