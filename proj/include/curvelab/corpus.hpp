#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/invariants.hpp"

namespace curvelab {

struct CorpusExpect {
  std::optional<bool> fnc;
  std::optional<long long> Mq;
  std::optional<long long> MqS;
  std::optional<long long> N1;
  std::optional<long long> g;  // certified genus
};

struct CorpusEntry {
  std::string name;
  int p;
  int s;
  std::string text;  // homogeneous form in x, y, z
  CorpusExpect expected;
  std::string notes;
};

const std::vector<CorpusEntry>& corpus();
// Throws UnknownExample.
const CorpusEntry& corpus_entry(const std::string& name);

PlaneCurve corpus_curve(const CorpusEntry& e);

struct CorpusCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, empty when passing
};

CorpusCheck verify_entry(const CorpusEntry& e, const CurveReport& r);

}  // namespace curvelab
