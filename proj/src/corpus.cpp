#include "curvelab/corpus.hpp"

#include <sstream>

namespace curvelab {

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> v;
  {
    CorpusEntry e;
    e.name = "borges-homma-f4";
    e.p = 2;
    e.s = 2;
    e.text =
        "x^4*y^2 + x^2*y^4 + x^4*y*z + x*y^4*z + x^4*z^2 + x^2*y^2*z^2 + "
        "y^4*z^2 + x^2*z^4 + x*y*z^4 + y^2*z^4";
    e.expected.fnc = true;
    e.expected.Mq = 7;
    e.expected.MqS = 0;
    e.expected.N1 = 14;
    e.expected.g = 3;
    e.notes =
        "Sextic over GF(4) whose seven rational points are the nodes "
        "PG(2,2); N1 = 6(4-6+2) + 7*2 = 14. Counts frozen from the "
        "exhaustive PG(2,4) scan and blowup resolution.";
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "fermat13-f27";
    e.p = 3;
    e.s = 3;
    e.text = "x^13 - y^13 - z^13";
    e.expected.fnc = true;
    e.expected.Mq = 208;
    e.expected.MqS = 208;
    e.expected.N1 = 208;
    e.expected.g = 66;
    e.notes =
        "Smooth Fermat curve of degree 13 over GF(27); attains the "
        "Hefez-Voloch count d(q-d+2) = 208. Counts frozen from the "
        "exhaustive scan.";
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "c2-f27";
    e.p = 3;
    e.s = 3;
    e.text = "x^13 + 2*y^13 + 2*y^9*z^4 + 2*y^3*z^10 + 2*y*z^12 + z^13";
    e.expected.fnc = true;
    e.expected.Mq = 280;
    e.expected.MqS = 280;
    e.expected.N1 = 280;
    e.expected.g = 42;
    e.notes =
        "Singular degree-13 companion over GF(27) (integer coefficient 2 is "
        "the prime-field element). Its singular locus is one Frobenius orbit "
        "of two non-rational points, so MqS = Mq = 280; genus drops to 42. "
        "Counts frozen from the exhaustive scan and blowup resolution.";
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "hermitian-q2";
    e.p = 2;
    e.s = 2;
    e.text = "x^3 + y^3 + z^3";
    e.expected.fnc = true;
    e.expected.Mq = 9;
    e.expected.MqS = 9;
    e.expected.N1 = 9;
    e.expected.g = 1;
    e.notes =
        "Hermitian curve for q0 = 2 over GF(4): the extremal case "
        "d = sqrt(q) + 1 with N1 = 9 = bound_hv(3,4). Counts frozen from "
        "the exhaustive scan.";
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "hermitian-q3";
    e.p = 3;
    e.s = 2;
    e.text = "x^4 + y^4 + z^4";
    e.expected.fnc = true;
    e.expected.Mq = 28;
    e.expected.MqS = 28;
    e.expected.N1 = 28;
    e.expected.g = 3;
    e.notes =
        "Hermitian curve for q0 = 3 over GF(9): d = sqrt(q) + 1 with "
        "N1 = 28 = bound_hv(4,9). Counts frozen from the exhaustive scan.";
    v.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "dls-q8";
    e.p = 2;
    e.s = 3;
    e.text = "x^10 + x^3*z^7 + y^8*z^2 + y*z^9";
    e.expected.fnc = true;
    e.expected.Mq = 65;
    e.expected.MqS = 64;
    e.expected.N1 = 65;
    e.expected.g = 14;
    e.notes =
        "Homogenized plane model of y^8 - y = x^2(x^8 - x) over GF(8) "
        "(q = 8, q0 = 2), singular at infinity. Counts and genus frozen "
        "from the first run of the exhaustive scan and blowup resolution; "
        "they agree with the Suzuki-curve values N1 = q^2 + 1 = 65 and "
        "g = q0(q-1) = 14.";
    v.push_back(e);
  }
  return v;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw UnknownExample("unknown example: " + name);
}

PlaneCurve corpus_curve(const CorpusEntry& e) {
  const Field& f = build_field(e.p, e.s);
  return PlaneCurve(parse_poly(e.text, f, 3), true);
}

CorpusCheck verify_entry(const CorpusEntry& e, const CurveReport& r) {
  CorpusCheck c;
  c.name = e.name;
  std::ostringstream bad;
  auto expect = [&bad](const char* what, long long got, long long want) {
    if (got != want)
      bad << what << ": got " << got << ", expected " << want << "; ";
  };
  if (e.expected.fnc && r.frob.fnc != *e.expected.fnc)
    bad << "fnc: got " << (r.frob.fnc ? "true" : "false") << "; ";
  if (e.expected.Mq) expect("Mq", r.counts.Mq, *e.expected.Mq);
  if (e.expected.MqS) expect("MqS", r.counts.MqS, *e.expected.MqS);
  if (e.expected.N1) expect("N1", r.N1, *e.expected.N1);
  if (e.expected.g) {
    if (!r.genus.certified)
      bad << "genus: not certified; ";
    else
      expect("g", r.genus.g_hi, *e.expected.g);
  }
  c.detail = bad.str();
  c.pass = c.detail.empty();
  return c;
}

}  // namespace curvelab
